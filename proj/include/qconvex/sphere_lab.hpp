#pragma once

#include <span>
#include <vector>

#include "qconvex/convexity_bounds.hpp"
#include "qconvex/principal_spectrum.hpp"

namespace qconvex {

/// The product torus S^p(r) × S^{n−p}(sqrt(1−r²)) in the unit sphere S^{n+1}.
struct TorusParams {
  int n = 0;
  int p = 0;
  double r = 0.0;
};

/// Default admissible radius window: [sqrt(p/n) + kRadiusMargin, 1 − kRadiusMargin].
inline constexpr double kRadiusMargin = 1e-6;

/// −sqrt(1−r²)/r with multiplicity p, r/sqrt(1−r²) with multiplicity n−p.
PrincipalSpectrum torus_spectrum(const TorusParams& t);

/// H = (n r² − p) / (n r sqrt(1−r²)); nonnegative for r² >= p/n.
double torus_mean_curvature(const TorusParams& t);

/// sqrt(p/q): the torus is q-convex exactly for r >= this radius. Requires q > p.
double torus_qconvexity_threshold(int p, int q);

/// True when 1 <= p < q <= n−1 and p <= n−q, i.e. the torus degree p sits in
/// the range where both the T-bound and the pinching bound apply.
bool admissible_torus_triple(int n, int p, int q);

struct ScanRow {
  double r = 0.0;
  double margin = 0.0;
  ConvexityStatus convexity = ConvexityStatus::violated;
  double mean_curvature = 0.0;
  double pinching_threshold = 0.0;
  double pinching_slack = 0.0;  ///< H − threshold; <= 0 means pinched
  double lambda_min = 0.0;      ///< smallest eigenvalue of T^[p]
  double tmin_bound = 0.0;
  double bochner_bound = 0.0;   ///< pointwise bound on 𝔅^[p] (ambient c)
  RigidityStatus rigidity = RigidityStatus::invalid;
};

struct ScanOptions {
  double c = 1.0;  ///< ambient curvature-operator constant (unit sphere: 1)
  /// Enforce the default radius window; disable to scan raw radii in (0, 1).
  bool enforce_radius_window = true;
};

/// One row per radius, in input order. Requires an admissible (n, p, q) and a
/// non-empty grid.
std::vector<ScanRow> sharpness_scan(int n, int p, int q, std::span<const double> r_grid, const ScanOptions& options = {});

/// Uniform grid of `steps` radii on [lo, hi].
std::vector<double> radius_grid(double lo, double hi, int steps);

}  // namespace qconvex
