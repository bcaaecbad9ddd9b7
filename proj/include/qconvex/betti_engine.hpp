#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qconvex/convexity_bounds.hpp"
#include "qconvex/curvature_bochner.hpp"
#include "qconvex/error.hpp"
#include "qconvex/principal_spectrum.hpp"

namespace qconvex {

/// A sample point whose q-margin is below −tolerance.
class ConvexityViolation : public DomainError {
 public:
  ConvexityViolation(std::size_t point, double margin, double tolerance);
  std::size_t point() const { return point_; }
  double margin() const { return margin_; }

 private:
  std::size_t point_;
  double margin_;
};

/// Pointwise shape-operator data of a closed q-convex hypersurface Mⁿ.
class HypersurfaceSample {
 public:
  /// Throws ConvexityViolation for the first point that is not q-nonnegative
  /// and DomainError on inconsistent dimensions or a non-positive diameter.
  HypersurfaceSample(int n, int q, std::vector<PrincipalSpectrum> points, std::optional<double> diameter = std::nullopt,
                     double margin_tolerance_scale = kMarginToleranceScale);

  int dimension() const { return n_; }
  int convexity_order() const { return q_; }
  const std::vector<PrincipalSpectrum>& points() const { return points_; }
  const std::optional<double>& diameter() const { return diameter_; }
  double margin_tolerance_scale() const { return tolerance_scale_; }

  /// Some sample point has strictly positive q-margin.
  bool strict_somewhere() const;
  double max_mean_curvature() const;

 private:
  int n_;
  int q_;
  std::vector<PrincipalSpectrum> points_;
  std::optional<double> diameter_;
  double tolerance_scale_;
};

enum class BettiStatus { no_conclusion, exponential_bound, bounded_binomial, vanishes };

std::string_view to_string(BettiStatus s);
std::optional<BettiStatus> betti_status_from_string(std::string_view s);

/// Which vanishing/estimation argument produced a degree's status.
enum class BettiRule {
  none,
  connectedness,     ///< β_0 = β_n = 1 for closed connected oriented M
  convexity_range,   ///< q <= i <= p with c >= 0: 𝔅^[i] >= 0
  mean_pinching,     ///< i below q, c > 0, H within the pinching threshold: 𝔅^[i] >= 0
  diameter_ambient,  ///< q <= i <= p with c < 0: 𝔅^[i] >= i(n-i)c plus a diameter bound
  diameter_kappa,    ///< i below q: 𝔅^[i] >= i(n-i)κ_i plus a diameter bound
  nonnegative_limit, ///< κ_i = 0: 𝔅^[i] >= 0 without pinching slack
};

std::string_view to_string(BettiRule r);
std::optional<BettiRule> betti_rule_from_string(std::string_view s);

struct DegreeCertificate {
  int degree = 0;
  BettiStatus status = BettiStatus::no_conclusion;
  BettiRule rule = BettiRule::none;
  /// Degree whose argument fired (differs from `degree` when copied by duality).
  int source_degree = 0;
  std::size_t binomial = 0;  ///< binom(n, i), the base of every bound
  std::optional<double> curvature_floor;  ///< c or κ_i feeding the lower bound on 𝔅^[i]
  std::optional<double> exponent;         ///< sqrt(−κ D² i(n−i)) for exponential bounds
  std::optional<double> numeric_bound;    ///< binom · exp(C · exponent), only with a supplied C
  /// β_i > 0 would force parallel harmonic forms (equality everywhere in the bound).
  bool rigidity = false;
  std::string reason;

  friend bool operator==(const DegreeCertificate&, const DegreeCertificate&) = default;
};

struct BettiCertificate {
  int n = 0;
  int q = 0;
  int p = 0;
  double c = 0.0;
  std::vector<DegreeCertificate> degrees;  ///< index i holds degree i, 0..n

  const DegreeCertificate& operator[](int i) const { return degrees[static_cast<std::size_t>(i)]; }
  friend bool operator==(const BettiCertificate&, const BettiCertificate&) = default;
};

struct EngineConfig {
  /// H counts as equal to the pinching threshold within tol · (1 + threshold).
  double pinching_tolerance = 1e-10;
  /// Smallness constant: when κ D² >= −epsilon the exponential bound collapses
  /// to binom(n, i). Not computable from first principles; user supplied.
  std::optional<double> epsilon;
  /// Multiplicative constant C in binom · exp(C · exponent); user supplied.
  std::optional<double> exponent_constant;
};

/// (n−q)/n · sqrt(ℓ/(q−ℓ)) · c. Requires 1 <= ℓ < q <= n−1 and c >= 0.
double pinching_threshold(int n, int q, int ell, double c);

/// κ_ℓ = c − ((q−ℓ)/ℓ) · (n/(n−q))² · H_max²  (c for ℓ >= q).
double kappa(double c, int n, int q, int ell, double max_mean_curvature);

struct ExponentBound {
  double exponent = 0.0;
  bool capped = false;
};

/// exponent = sqrt(−κ D² i(n−i)); `capped` when an epsilon is supplied and κ D² >= −epsilon.
ExponentBound exponent_bound(int n, int i, double kappa, double diameter, std::optional<double> epsilon = std::nullopt);

BettiCertificate certify(const HypersurfaceSample& sample, const AmbientModel& ambient, int p,
                         const EngineConfig& config = {});

}  // namespace qconvex
