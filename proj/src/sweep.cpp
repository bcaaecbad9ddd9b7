#include "qconvex/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "qconvex/betti_engine.hpp"
#include "qconvex/convexity_bounds.hpp"
#include "qconvex/curvature_bochner.hpp"
#include "qconvex/error.hpp"
#include "qconvex/exterior_operators.hpp"
#include "qconvex/parallel.hpp"
#include "qconvex/sampling.hpp"
#include "qconvex/sphere_lab.hpp"
#include "qconvex/version.hpp"

namespace qconvex {

namespace {

constexpr SweepSuite kSuites[] = {SweepSuite::spectrum_equivalence, SweepSuite::tmin_bound,
                                  SweepSuite::contraction_identity, SweepSuite::bres_bound,
                                  SweepSuite::torus_sharpness};

constexpr int kMaxSweepDimension = 10;

struct Outcome {
  bool ok = true;
  double violation = 0.0;
};

double squared_scale(double trace) { return 1.0 + trace * trace; }

Outcome spectrum_equivalence(int n, Rng& rng) {
  const int p = rng.integer(1, n - 1);
  const auto a = random_symmetric(n, rng, rng.uniform(0.5, 3.0));
  const auto closed = closed_form_values(a.eigenvalues(), p);
  const auto dense = dense_spectrum(weitzenbock_extension(a, p));
  double dev = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) dev = std::max(dev, std::abs(closed[i] - dense[i]));
  const double v = dev / squared_scale(a.trace());
  return {v <= 1e-9, v};
}

Outcome tmin_bound(int n, Rng& rng) {
  const int q = rng.integer(1, n - 1);
  const int p = rng.integer(1, std::min(q, n - q));
  const auto k = random_qnonnegative_spectrum(n, q, rng);
  const double lambda_min = closed_form_values(k, p).front();
  const double bound = tmin_lower_bound(n, p, q, k.trace());
  const double v = std::max(0.0, bound - lambda_min) / squared_scale(k.trace());
  Outcome out{v <= 1e-9, v};
  if (p < q && qconvex_margin(k, q).status == ConvexityStatus::strict && !(lambda_min > bound)) out.ok = false;
  return out;
}

Outcome contraction_identity(int n, Rng& rng) {
  const int p = rng.integer(1, n - 1);
  const auto a = random_symmetric(n, rng);
  const auto lhs = bochner_contract(extrinsic_operator(a), p);
  const auto rhs = weitzenbock_extension(a, p);
  const double v = max_entry_deviation(lhs.matrix(), rhs.matrix());
  return {v <= 1e-10, v};
}

Outcome bres_bound(int n, Rng& rng) {
  const int p = rng.integer(1, n / 2);
  const double c = rng.uniform(-2.0, 2.0);
  const auto ambient = random_ambient_with_kyfan(n + 1, n - p, c, rng);
  const auto frame = random_frame(n + 1, n, rng);
  const auto restricted = compress_ambient(ambient, frame);
  double v = 0.0;
  for (int ell = 1; ell <= p; ++ell) {
    const double lowest = dense_spectrum(bochner_contract(restricted, ell)).front();
    v = std::max(v, c * ell * (n - ell) - lowest);
  }
  return {v <= 1e-9, std::max(0.0, v)};
}

Outcome torus_sharpness(int n, Rng& rng) {
  std::vector<std::pair<int, int>> triples;
  for (int p = 1; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (admissible_torus_triple(n, p, q)) triples.emplace_back(p, q);
    }
  }
  const auto [p, q] = triples[static_cast<std::size_t>(rng.integer(0, static_cast<int>(triples.size()) - 1))];
  const double r0 = torus_qconvexity_threshold(p, q);
  const double r_hi = 0.99;
  const double r1 = rng.uniform(std::min(r0 + 1e-3, r_hi), r_hi);
  const std::vector<double> grid{r0, r1};
  const auto rows = sharpness_scan(n, p, q, grid);

  const auto& edge = rows[0];
  const double scale = squared_scale(n * edge.mean_curvature);
  double v = std::max({std::abs(edge.margin), std::abs(edge.pinching_slack), std::abs(edge.bochner_bound),
                       std::abs(edge.lambda_min - edge.tmin_bound)}) /
             scale;
  Outcome out{v <= 1e-12, v};
  if (edge.rigidity != RigidityStatus::boundary_rigid) out.ok = false;

  const int p_cert = rng.integer(1, n / 2);
  const HypersurfaceSample sample(n, q, {torus_spectrum({n, p, r1})});
  const auto cert = certify(sample, AmbientModel::from_bound(n, p_cert, 1.0), p_cert);
  if (cert[p].status == BettiStatus::vanishes || cert[n - p].status == BettiStatus::vanishes) {
    out.ok = false;
    out.violation = std::max(out.violation, 1.0);
  }
  return out;
}

using SuiteBody = std::function<Outcome(int, Rng&)>;

SuiteBody suite_body(SweepSuite s) {
  switch (s) {
    case SweepSuite::spectrum_equivalence: return spectrum_equivalence;
    case SweepSuite::tmin_bound: return tmin_bound;
    case SweepSuite::contraction_identity: return contraction_identity;
    case SweepSuite::bres_bound: return bres_bound;
    case SweepSuite::torus_sharpness: return torus_sharpness;
  }
  throw DomainError("unknown sweep suite");
}

double suite_tolerance(SweepSuite s) {
  switch (s) {
    case SweepSuite::spectrum_equivalence: return 1e-9;
    case SweepSuite::tmin_bound: return 1e-9;
    case SweepSuite::contraction_identity: return 1e-10;
    case SweepSuite::bres_bound: return 1e-9;
    case SweepSuite::torus_sharpness: return 1e-12;
  }
  return 0.0;
}

std::size_t suite_index(SweepSuite s) {
  return static_cast<std::size_t>(std::find(std::begin(kSuites), std::end(kSuites), s) - std::begin(kSuites));
}

SuiteResult run_suite(SweepSuite s, const SweepConfig& config) {
  const std::uint64_t suite_seed = derive_seed(config.seed, suite_index(s));
  const auto body = suite_body(s);
  const auto count = static_cast<std::size_t>(config.samples);
  std::vector<Outcome> outcomes(count);
  parallel_for(
      count,
      [&](std::size_t i) {
        Rng rng = Rng::stream(suite_seed, i);
        const int n = rng.integer(config.n_min, config.n_max);
        outcomes[i] = body(n, rng);
      },
      config.threads);

  SuiteResult r;
  r.suite = std::string(to_string(s));
  r.tolerance = suite_tolerance(s);
  r.samples = config.samples;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& o = outcomes[i];
    r.max_violation = std::max(r.max_violation, o.violation);
    if (o.ok) {
      ++r.passed;
    } else {
      ++r.failed;
      if (!r.first_counterexample) {
        r.first_counterexample = static_cast<int>(i);
        r.counterexample_seed = derive_seed(suite_seed, i);
      }
    }
  }
  return r;
}

}  // namespace

std::string_view to_string(SweepSuite s) {
  switch (s) {
    case SweepSuite::spectrum_equivalence: return "spectrum_equivalence";
    case SweepSuite::tmin_bound: return "tmin_bound";
    case SweepSuite::contraction_identity: return "contraction_identity";
    case SweepSuite::bres_bound: return "bres_bound";
    case SweepSuite::torus_sharpness: return "torus_sharpness";
  }
  return "unknown";
}

std::optional<SweepSuite> sweep_suite_from_string(std::string_view s) {
  for (auto suite : kSuites) {
    if (to_string(suite) == s) return suite;
  }
  return std::nullopt;
}

std::vector<SweepSuite> all_sweep_suites() { return {std::begin(kSuites), std::end(kSuites)}; }

bool SweepReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

SweepReport random_sweep(const SweepConfig& config) {
  if (config.n_min < 3 || config.n_max > kMaxSweepDimension || config.n_min > config.n_max) {
    throw DomainError("sweep: n range must satisfy 3 <= n_min <= n_max <= " + std::to_string(kMaxSweepDimension));
  }
  if (config.samples < 1) throw DomainError("sweep: samples must be positive");

  SweepReport report;
  report.version = std::string(kVersion);
  report.seed = config.seed;
  report.n_min = config.n_min;
  report.n_max = config.n_max;
  report.samples = config.samples;
  const auto suites = config.suites.empty() ? all_sweep_suites() : config.suites;
  for (auto s : suites) report.suites.push_back(run_suite(s, config));
  return report;
}

std::string render_structured(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = std::string(kSweepSchema);
  j["version"] = r.version;
  j["seed"] = r.seed;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["samples"] = r.samples;
  auto suites = nlohmann::ordered_json::array();
  for (const auto& s : r.suites) {
    nlohmann::ordered_json sj;
    sj["suite"] = s.suite;
    sj["tolerance"] = s.tolerance;
    sj["samples"] = s.samples;
    sj["passed"] = s.passed;
    sj["failed"] = s.failed;
    sj["max_violation"] = s.max_violation;
    sj["first_counterexample"] = s.first_counterexample ? nlohmann::ordered_json(*s.first_counterexample) : nullptr;
    sj["counterexample_seed"] = s.counterexample_seed ? nlohmann::ordered_json(*s.counterexample_seed) : nullptr;
    suites.push_back(std::move(sj));
  }
  j["suites"] = std::move(suites);
  j["all_passed"] = r.all_passed();
  return j.dump(2) + "\n";
}

std::string render_text(const SweepReport& r) {
  std::ostringstream out;
  out << "qconvex " << r.version << " sweep: seed " << r.seed << ", n in [" << r.n_min << ", " << r.n_max << "], "
      << r.samples << " samples per suite\n\n";
  out << "  suite                  tolerance  passed  failed  max violation  first counterexample\n";
  for (const auto& s : r.suites) {
    out << "  " << std::left << std::setw(22) << s.suite << std::right << ' ' << std::setw(9) << std::setprecision(1)
        << std::scientific << s.tolerance << "  " << std::setw(6) << s.passed << "  " << std::setw(6) << s.failed << "  "
        << std::setw(13) << std::setprecision(3) << s.max_violation << "  ";
    if (s.first_counterexample) {
      out << "sample " << *s.first_counterexample << " (seed " << *s.counterexample_seed << ")";
    } else {
      out << "none";
    }
    out << '\n';
  }
  out << "\n  " << (r.all_passed() ? "all suites passed" : "FAILURES present") << '\n';
  return out.str();
}

}  // namespace qconvex
