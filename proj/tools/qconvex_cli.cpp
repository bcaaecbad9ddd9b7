// qconvex command-line front end: certify, torus-scan, sweep, spectrum.
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qconvex/convexity_bounds.hpp"
#include "qconvex/error.hpp"
#include "qconvex/exterior_operators.hpp"
#include "qconvex/report.hpp"
#include "qconvex/scenario.hpp"
#include "qconvex/sphere_lab.hpp"
#include "qconvex/sweep.hpp"
#include "qconvex/version.hpp"

namespace {

using namespace qconvex;
using ojson = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kValidation = 2, kParse = 3, kInternal = 4 };

struct OutputOptions {
  std::string format = "text";
  std::string out;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--out", o.out, "Write output to PATH instead of stdout");
}

void emit(const OutputOptions& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + o.out);
  file << text;
  if (!file) throw std::runtime_error("failed writing output file " + o.out);
}

struct CertifyArgs {
  std::string scenario;
  std::optional<int> n, q, p;
  std::optional<double> c;
  std::vector<std::string> points;
  std::optional<double> diameter;
  bool strict_ambient = false;
  double tol = kMarginToleranceScale;
  double pinching_tol = 1e-10;
  std::optional<double> epsilon;
  std::optional<double> constant;
  OutputOptions output;
};

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ScenarioError(ScenarioErrorKind::parse, flag, "not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw ScenarioError(ScenarioErrorKind::parse, flag, "empty list");
  return out;
}

int run_certify(const CertifyArgs& a) {
  Scenario s;
  if (!a.scenario.empty()) {
    s = load_scenario(a.scenario);
  } else {
    if (!a.n || !a.q || !a.p || !a.c || a.points.empty()) {
      throw ScenarioError(ScenarioErrorKind::validation, "",
                          "certify needs a scenario file or all of --n --q --p --c and at least one --point");
    }
    s.n = *a.n;
    s.q = *a.q;
    s.p = *a.p;
    s.c = a.c;
    for (const auto& pt : a.points) {
      auto k = parse_list(pt, "--point");
      if (static_cast<int>(k.size()) != s.n) {
        throw ScenarioError(ScenarioErrorKind::parse, "--point", "expected " + std::to_string(s.n) + " curvatures");
      }
      s.points.push_back(std::move(k));
    }
    s.diameter = a.diameter;
    s.ambient_strict_at_point = a.strict_ambient;
  }
  RunOptions opts;
  opts.margin_tolerance_scale = a.tol;
  opts.engine.pinching_tolerance = a.pinching_tol;
  opts.engine.epsilon = a.epsilon;
  opts.engine.exponent_constant = a.constant;
  const Report r = build_report(s, opts);
  emit(a.output, a.output.format == "structured" ? render_structured(r) : render_text(r));
  return kOk;
}

struct ScanArgs {
  int n = 4, p = 1, q = 2;
  double c = 1.0;
  std::vector<double> radii;
  std::optional<double> r_min, r_max;
  int steps = 11;
  bool raw = false;
  OutputOptions output;
};

int run_torus_scan(const ScanArgs& a) {
  std::vector<double> grid = a.radii;
  if (grid.empty()) {
    const double lo = a.r_min.value_or(torus_qconvexity_threshold(a.p, a.q));
    const double hi = a.r_max.value_or(0.99);
    grid = radius_grid(lo, hi, a.steps);
  }
  const auto rows = sharpness_scan(a.n, a.p, a.q, grid, {a.c, !a.raw});
  if (a.output.format == "structured") {
    ojson j;
    j["schema"] = std::string(kScanSchema);
    j["version"] = std::string(kVersion);
    j["n"] = a.n;
    j["p"] = a.p;
    j["q"] = a.q;
    j["c"] = a.c;
    j["qconvexity_threshold"] = torus_qconvexity_threshold(a.p, a.q);
    auto arr = ojson::array();
    for (const auto& row : rows) {
      ojson rj;
      rj["r"] = row.r;
      rj["margin"] = row.margin;
      rj["convexity"] = std::string(to_string(row.convexity));
      rj["mean_curvature"] = row.mean_curvature;
      rj["pinching_threshold"] = row.pinching_threshold;
      rj["pinching_slack"] = row.pinching_slack;
      rj["lambda_min"] = row.lambda_min;
      rj["tmin_bound"] = row.tmin_bound;
      rj["bochner_bound"] = row.bochner_bound;
      rj["rigidity"] = std::string(to_string(row.rigidity));
      arr.push_back(std::move(rj));
    }
    j["rows"] = std::move(arr);
    emit(a.output, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << "Clifford torus T^" << a.n << "_" << a.p << "(r), q = " << a.q << ", c = " << a.c
      << ", q-convex for r >= " << std::setprecision(12) << torus_qconvexity_threshold(a.p, a.q) << "\n";
  out << std::setw(12) << "r" << std::setw(14) << "margin" << std::setw(13) << "convexity" << std::setw(14) << "H"
      << std::setw(14) << "H - thresh" << std::setw(14) << "lambda_min" << std::setw(14) << "T bound" << std::setw(14)
      << "B bound" << "  rigidity\n";
  out << std::fixed << std::setprecision(8);
  for (const auto& row : rows) {
    out << std::setw(12) << row.r << std::setw(14) << row.margin << std::setw(13) << to_string(row.convexity)
        << std::setw(14) << row.mean_curvature << std::setw(14) << row.pinching_slack << std::setw(14)
        << row.lambda_min << std::setw(14) << row.tmin_bound << std::setw(14) << row.bochner_bound << "  "
        << to_string(row.rigidity) << '\n';
  }
  emit(a.output, out.str());
  return kOk;
}

struct SweepArgs {
  std::uint64_t seed = 42;
  int n_min = 3, n_max = 6, samples = 1000;
  std::vector<std::string> suites;
  unsigned threads = 0;
  OutputOptions output;
};

int run_sweep(const SweepArgs& a) {
  SweepConfig cfg;
  cfg.seed = a.seed;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max;
  cfg.samples = a.samples;
  cfg.threads = a.threads;
  for (const auto& name : a.suites) {
    const auto s = sweep_suite_from_string(name);
    if (!s) throw DomainError("unknown sweep suite '" + name + "'");
    cfg.suites.push_back(*s);
  }
  const auto report = random_sweep(cfg);
  emit(a.output, a.output.format == "structured" ? render_structured(report) : render_text(report));
  return report.all_passed() ? kOk : kChecksFailed;
}

struct SpectrumArgs {
  std::string k;
  int p = 1;
  std::optional<int> q;
  double tol = kMarginToleranceScale;
  OutputOptions output;
};

int run_spectrum(const SpectrumArgs& a) {
  const PrincipalSpectrum k(parse_list(a.k, "--k"));
  const auto pairs = closed_form_spectrum(k, a.p);
  const auto values = closed_form_values(k, a.p);
  const auto dense = dense_spectrum(weitzenbock_extension(SymmetricOperator::diagonal(k.values()), a.p));
  std::optional<ConvexityMargin> margin;
  std::optional<double> bound;
  std::optional<RigidityStatus> rigid;
  if (a.q) {
    margin = qconvex_margin(k, *a.q, default_margin_tolerance(k, a.tol));
    bound = tmin_lower_bound(k.dimension(), a.p, *a.q, k.trace());
    if (a.p <= std::min(*a.q, k.dimension() - *a.q)) rigid = rigidity_check(k, a.p, *a.q);
  }

  if (a.output.format == "structured") {
    ojson j;
    j["version"] = std::string(kVersion);
    j["curvatures"] = std::vector<double>(k.values().begin(), k.values().end());
    j["p"] = a.p;
    j["trace"] = k.trace();
    auto arr = ojson::array();
    for (const auto& e : pairs) {
      ojson ej;
      ej["index"] = e.index.to_string();
      ej["value"] = e.value;
      arr.push_back(std::move(ej));
    }
    j["closed_form"] = std::move(arr);
    j["sorted"] = values;
    j["dense"] = dense;
    if (a.q) {
      j["q"] = *a.q;
      j["margin"] = margin->margin;
      j["convexity"] = std::string(to_string(margin->status));
      j["tmin_bound"] = *bound;
      j["rigidity"] = rigid ? ojson(std::string(to_string(*rigid))) : ojson(nullptr);
    }
    emit(a.output, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << std::setprecision(12);
  out << "T_A^[" << a.p << "] for principal curvatures";
  for (double v : k.values()) out << ' ' << v;
  out << " (trace " << k.trace() << ")\n";
  for (const auto& e : pairs) out << "  " << e.index.to_string() << "  K_a K_*a = " << e.value << '\n';
  out << "sorted:";
  for (double v : values) out << ' ' << v;
  out << "\ndense: ";
  for (double v : dense) out << ' ' << (std::abs(v) < 1e-12 ? 0.0 : v);
  out << '\n';
  if (a.q) {
    out << "q = " << *a.q << ": margin " << margin->margin << " (" << to_string(margin->status) << "), bound "
        << *bound << ", lambda_min " << values.front();
    if (rigid) out << ", " << to_string(*rigid);
    out << '\n';
  }
  emit(a.output, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-convex hypersurface Betti certificates and exterior-power spectra"};
  app.set_version_flag("--version", std::string(qconvex::kVersion));
  app.require_subcommand(1);

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Certify Betti numbers for a scenario file or inline data");
  certify->add_option("scenario", certify_args.scenario, "Scenario JSON file");
  certify->add_option("--n", certify_args.n, "Hypersurface dimension");
  certify->add_option("--q", certify_args.q, "Convexity order");
  certify->add_option("--p", certify_args.p, "Ambient curvature degree");
  certify->add_option("--c", certify_args.c, "Lower bound on the ambient (n-p) eigenvalue average");
  certify->add_option("--point", certify_args.points, "Principal curvatures of one sample point, comma separated");
  certify->add_option("--diameter", certify_args.diameter, "Diameter bound D");
  certify->add_flag("--strict-ambient", certify_args.strict_ambient, "Assert strict ambient positivity at a point");
  certify->add_option("--tol", certify_args.tol, "Margin tolerance scale")->capture_default_str();
  certify->add_option("--pinching-tol", certify_args.pinching_tol, "Relative pinching tolerance")->capture_default_str();
  certify->add_option("--epsilon", certify_args.epsilon, "Smallness constant for capping exponential bounds");
  certify->add_option("--constant", certify_args.constant, "Multiplicative constant C in exponential bounds");
  add_output_flags(certify, certify_args.output);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("torus-scan", "Sharpness scan over the Clifford torus family");
  scan->add_option("--n", scan_args.n, "Dimension")->capture_default_str();
  scan->add_option("--p", scan_args.p, "Sphere factor dimension")->capture_default_str();
  scan->add_option("--q", scan_args.q, "Convexity order")->capture_default_str();
  scan->add_option("--c", scan_args.c, "Ambient constant")->capture_default_str();
  scan->add_option("--r", scan_args.radii, "Explicit radius (repeatable)");
  scan->add_option("--r-min", scan_args.r_min, "Grid start (default sqrt(p/q))");
  scan->add_option("--r-max", scan_args.r_max, "Grid end (default 0.99)");
  scan->add_option("--steps", scan_args.steps, "Grid points")->capture_default_str();
  scan->add_flag("--raw", scan_args.raw, "Do not enforce the default radius window");
  add_output_flags(scan, scan_args.output);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Seeded randomized property sweeps");
  sweep->add_option("--seed", sweep_args.seed, "Master seed")->capture_default_str();
  sweep->add_option("--n", sweep_args.n_max, "Largest dimension (alias of --n-max)");
  sweep->add_option("--n-min", sweep_args.n_min, "Smallest dimension")->capture_default_str();
  sweep->add_option("--n-max", sweep_args.n_max, "Largest dimension")->capture_default_str();
  sweep->add_option("--samples", sweep_args.samples, "Samples per suite")->capture_default_str();
  sweep->add_option("--suite", sweep_args.suites, "Suite to run (repeatable; default all)");
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = hardware)")->capture_default_str();
  add_output_flags(sweep, sweep_args.output);

  SpectrumArgs spec_args;
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form and dense spectrum of T_A^[p]");
  spectrum->add_option("--k", spec_args.k, "Principal curvatures, comma separated")->required();
  spectrum->add_option("--p", spec_args.p, "Form degree")->capture_default_str();
  spectrum->add_option("--q", spec_args.q, "Convexity order for the lower bound");
  spectrum->add_option("--tol", spec_args.tol, "Margin tolerance scale")->capture_default_str();
  add_output_flags(spectrum, spec_args.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*certify) return run_certify(certify_args);
    if (*scan) return run_torus_scan(scan_args);
    if (*sweep) return run_sweep(sweep_args);
    if (*spectrum) return run_spectrum(spec_args);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ScenarioErrorKind::parse ? kParse : kValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
