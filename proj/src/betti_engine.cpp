#include "qconvex/betti_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qconvex/exterior_basis.hpp"

namespace qconvex {

namespace {

std::string describe_violation(std::size_t point, double margin, double tolerance) {
  std::ostringstream out;
  out.precision(17);
  out << "point " << point << " is not q-convex: margin " << margin << " < -" << tolerance;
  return out.str();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

constexpr std::array<std::pair<BettiStatus, std::string_view>, 4> kStatusNames{{
    {BettiStatus::no_conclusion, "no_conclusion"},
    {BettiStatus::exponential_bound, "exponential_bound"},
    {BettiStatus::bounded_binomial, "bounded_binomial"},
    {BettiStatus::vanishes, "vanishes"},
}};

constexpr std::array<std::pair<BettiRule, std::string_view>, 7> kRuleNames{{
    {BettiRule::none, "none"},
    {BettiRule::connectedness, "connectedness"},
    {BettiRule::convexity_range, "convexity_range"},
    {BettiRule::mean_pinching, "mean_pinching"},
    {BettiRule::diameter_ambient, "diameter_ambient"},
    {BettiRule::diameter_kappa, "diameter_kappa"},
    {BettiRule::nonnegative_limit, "nonnegative_limit"},
}};

}  // namespace

ConvexityViolation::ConvexityViolation(std::size_t point, double margin, double tolerance)
    : DomainError(describe_violation(point, margin, tolerance)), point_(point), margin_(margin) {}

HypersurfaceSample::HypersurfaceSample(int n, int q, std::vector<PrincipalSpectrum> points,
                                       std::optional<double> diameter, double margin_tolerance_scale)
    : n_(n), q_(q), points_(std::move(points)), diameter_(diameter), tolerance_scale_(margin_tolerance_scale) {
  if (n < 3 || n > kMaxDimension - 1) throw DomainError("HypersurfaceSample: n must lie in [3, 15]");
  if (q < 1 || q > n - 1) throw DomainError("HypersurfaceSample: q must lie in [1, n-1]");
  if (points_.empty()) throw DomainError("HypersurfaceSample: at least one sample point is required");
  if (diameter_ && !(*diameter_ > 0.0 && std::isfinite(*diameter_))) {
    throw DomainError("HypersurfaceSample: diameter must be positive and finite");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dimension() != n) {
      throw DomainError("HypersurfaceSample: point " + std::to_string(i) + " has " +
                        std::to_string(points_[i].dimension()) + " curvatures, expected " + std::to_string(n));
    }
    const auto m = qconvex_margin(points_[i], q, default_margin_tolerance(points_[i], tolerance_scale_));
    if (m.status == ConvexityStatus::violated) throw ConvexityViolation(i, m.margin, m.tolerance);
  }
}

bool HypersurfaceSample::strict_somewhere() const {
  return std::any_of(points_.begin(), points_.end(),
                     [&](const PrincipalSpectrum& k) {
    return qconvex_margin(k, q_, default_margin_tolerance(k, tolerance_scale_)).status == ConvexityStatus::strict;
  });
}

double HypersurfaceSample::max_mean_curvature() const {
  double h = 0.0;
  for (const auto& k : points_) h = std::max(h, k.mean_curvature());
  return h;
}

std::string_view to_string(BettiStatus s) {
  for (const auto& [value, name] : kStatusNames) {
    if (value == s) return name;
  }
  return "unknown";
}

std::optional<BettiStatus> betti_status_from_string(std::string_view s) {
  for (const auto& [value, name] : kStatusNames) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::string_view to_string(BettiRule r) {
  for (const auto& [value, name] : kRuleNames) {
    if (value == r) return name;
  }
  return "unknown";
}

std::optional<BettiRule> betti_rule_from_string(std::string_view s) {
  for (const auto& [value, name] : kRuleNames) {
    if (name == s) return value;
  }
  return std::nullopt;
}

double pinching_threshold(int n, int q, int ell, double c) {
  if (q < 2 || q > n - 1) throw DomainError("pinching_threshold: q must lie in [2, n-1]");
  if (ell < 1 || ell >= q) {
    throw DomainError("pinching_threshold: ell = " + std::to_string(ell) + " must satisfy 1 <= ell < q = " +
                      std::to_string(q));
  }
  if (c < 0.0) throw DomainError("pinching_threshold: c must be nonnegative");
  return static_cast<double>(n - q) / n * std::sqrt(static_cast<double>(ell) / (q - ell)) * c;
}

double kappa(double c, int n, int q, int ell, double max_mean_curvature) {
  if (q < 1 || q >= n) throw DomainError("kappa: q must lie in [1, n-1]");
  if (ell < 1) throw DomainError("kappa: ell must be positive");
  if (ell >= q) return c;
  const double ratio = static_cast<double>(n) / (n - q);
  return c - static_cast<double>(q - ell) / ell * ratio * ratio * max_mean_curvature * max_mean_curvature;
}

ExponentBound exponent_bound(int n, int i, double kappa_value, double diameter, std::optional<double> epsilon) {
  if (kappa_value >= 0.0) throw DomainError("exponent_bound: kappa must be negative (use the nonnegative path)");
  if (!(diameter > 0.0)) throw DomainError("exponent_bound: diameter must be positive");
  if (i < 0 || i > n) throw DomainError("exponent_bound: degree out of range");
  const double scaled = kappa_value * diameter * diameter;
  ExponentBound out;
  out.exponent = std::sqrt(-scaled * i * (n - i));
  out.capped = epsilon.has_value() && scaled >= -*epsilon;
  return out;
}

namespace {

int strength(const DegreeCertificate& d) { return static_cast<int>(d.status); }

bool stronger(const DegreeCertificate& a, const DegreeCertificate& b) {
  if (strength(a) != strength(b)) return strength(a) > strength(b);
  if (a.status == BettiStatus::exponential_bound) return a.exponent.value_or(0.0) < b.exponent.value_or(0.0);
  return false;
}

struct Context {
  int n;
  int q;
  int p;
  double c;
  double h_max;
  bool strict_convex;
  bool strict_ambient;
  std::optional<double> diameter;
  const HypersurfaceSample* sample;
  const EngineConfig* config;
};

/// Range of degrees handled by the pinched-mean-curvature argument.
int pinching_upper(const Context& ctx) {
  return 2 * ctx.q <= ctx.n ? std::min(ctx.p, ctx.q - 1) : std::min(ctx.p, ctx.n - ctx.q);
}

void apply_diameter(DegreeCertificate& d, const Context& ctx, double floor, BettiRule rule, const std::string& why) {
  d.curvature_floor = floor;
  if (floor >= 0.0) {
    d.status = BettiStatus::bounded_binomial;
    d.rule = BettiRule::nonnegative_limit;
    d.rigidity = true;
    d.reason = why + "; curvature floor " + fmt(floor) + " >= 0 gives a nonnegative Bochner term";
    return;
  }
  if (!ctx.diameter) {
    d.reason = why + "; negative floor " + fmt(floor) + " and no diameter bound supplied";
    return;
  }
  const auto e = exponent_bound(ctx.n, d.degree, floor, *ctx.diameter, ctx.config->epsilon);
  d.rule = rule;
  if (e.capped) {
    d.status = BettiStatus::bounded_binomial;
    d.reason = why + "; floor*D^2 = " + fmt(floor * *ctx.diameter * *ctx.diameter) +
               " within the supplied epsilon, bound collapses to binom(n,i)";
    return;
  }
  d.status = BettiStatus::exponential_bound;
  d.exponent = e.exponent;
  if (ctx.config->exponent_constant) {
    d.numeric_bound = static_cast<double>(d.binomial) * std::exp(*ctx.config->exponent_constant * e.exponent);
  }
  d.reason = why + "; beta_i <= binom(n,i) * exp(C * " + fmt(e.exponent) + ") with diameter " + fmt(*ctx.diameter);
}

DegreeCertificate raw_degree(int i, const Context& ctx) {
  DegreeCertificate d;
  d.degree = i;
  d.source_degree = i;
  d.binomial = binomial(ctx.n, i);
  const bool convex_range = ctx.q <= i && i <= ctx.p;
  const bool pinch_range = i >= 1 && i <= pinching_upper(ctx);

  if (convex_range && ctx.c >= 0.0) {
    d.rule = BettiRule::convexity_range;
    d.curvature_floor = ctx.c;
    const std::string base = "q <= i <= p and c = " + fmt(ctx.c) + " >= 0: Bochner term on i-forms is nonnegative";
    if (ctx.c > 0.0 || ctx.strict_convex || ctx.strict_ambient) {
      d.status = BettiStatus::vanishes;
      d.reason = base + (ctx.c > 0.0          ? "; ambient average strictly positive everywhere"
                         : ctx.strict_convex ? "; strictly q-convex at a sample point"
                                             : "; ambient strict positivity asserted at a point");
    } else {
      d.status = BettiStatus::bounded_binomial;
      d.rigidity = true;
      d.reason = base + "; no strict point, so a positive beta_i would carry parallel harmonic forms";
    }
    return d;
  }

  if (pinch_range && ctx.c > 0.0) {
    // Above c = 1 the linear threshold exceeds the zero of the pointwise Bochner
    // bound, which sits at the same expression with sqrt(c).
    const double stated = pinching_threshold(ctx.n, ctx.q, i, ctx.c);
    const double threshold = ctx.c > 1.0 ? pinching_threshold(ctx.n, ctx.q, i, std::sqrt(ctx.c)) : stated;
    const double tol = ctx.config->pinching_tolerance * (1.0 + threshold);
    if (ctx.h_max <= threshold + tol) {
      d.rule = BettiRule::mean_pinching;
      d.curvature_floor = kappa(ctx.c, ctx.n, ctx.q, i, ctx.h_max);
      const auto& pts = ctx.sample->points();
      const bool strict = std::any_of(pts.begin(), pts.end(), [&](const PrincipalSpectrum& k) {
        return k.mean_curvature() < threshold - tol;
      });
      std::string base = "H_max = " + fmt(ctx.h_max) + " <= pinching threshold " + fmt(threshold);
      if (threshold != stated) base += " (sqrt(c) form; the linear form gives " + fmt(stated) + ")";
      if (strict) {
        d.status = BettiStatus::vanishes;
        d.reason = base + " with strict inequality at a sample point";
      } else {
        d.status = BettiStatus::bounded_binomial;
        d.rigidity = true;
        d.reason = base + " with equality at every sample point; beta_i > 0 would force parallel i-forms";
      }
      return d;
    }
  }

  if (convex_range) {
    apply_diameter(d, ctx, ctx.c, BettiRule::diameter_ambient, "q <= i <= p with c = " + fmt(ctx.c) + " < 0");
    return d;
  }
  if (pinch_range) {
    const double k = kappa(ctx.c, ctx.n, ctx.q, i, ctx.h_max);
    const std::string why = ctx.c > 0.0 ? "pinching fails (kappa_i = " + fmt(k) + ")"
                                        : "c = " + fmt(ctx.c) + " <= 0, kappa_i = " + fmt(k);
    apply_diameter(d, ctx, k, BettiRule::diameter_kappa, why);
    return d;
  }
  d.reason = "degree outside every admissible range";
  return d;
}

}  // namespace

BettiCertificate certify(const HypersurfaceSample& sample, const AmbientModel& ambient, int p,
                         const EngineConfig& config) {
  const int n = sample.dimension();
  if (ambient.dimension() != n) {
    throw DomainError("certify: ambient model is for n = " + std::to_string(ambient.dimension()) +
                      ", sample has n = " + std::to_string(n));
  }
  if (ambient.degree() != p) {
    throw DomainError("certify: ambient bound refers to p = " + std::to_string(ambient.degree()) +
                      ", requested p = " + std::to_string(p));
  }
  if (p < 1 || p > n / 2) throw DomainError("certify: p must lie in [1, floor(n/2)]");

  const Context ctx{n,
                    sample.convexity_order(),
                    p,
                    ambient.bound(),
                    sample.max_mean_curvature(),
                    sample.strict_somewhere(),
                    ambient.strict_at_point(),
                    sample.diameter(),
                    &sample,
                    &config};

  std::vector<DegreeCertificate> raw;
  raw.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    if (i == 0 || i == n) {
      DegreeCertificate d;
      d.degree = i;
      d.source_degree = i;
      d.binomial = 1;
      d.rule = BettiRule::connectedness;
      d.reason = "beta_0 = beta_n = 1 for a closed connected oriented manifold (informational)";
      raw.push_back(std::move(d));
    } else {
      raw.push_back(raw_degree(i, ctx));
    }
  }

  BettiCertificate cert{n, ctx.q, p, ctx.c, {}};
  cert.degrees.resize(raw.size());
  for (int i = 0; i <= n; ++i) {
    const auto& own = raw[static_cast<std::size_t>(i)];
    const auto& mirror = raw[static_cast<std::size_t>(n - i)];
    // ties resolve to the lower of the two degrees so both entries agree
    const bool take_mirror = stronger(mirror, own) || (!stronger(own, mirror) && n - i < i);
    DegreeCertificate chosen = take_mirror ? mirror : own;
    chosen.degree = i;
    cert.degrees[static_cast<std::size_t>(i)] = std::move(chosen);
  }
  return cert;
}

}  // namespace qconvex
