#include "qconvex/sphere_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qconvex/betti_engine.hpp"
#include "qconvex/error.hpp"
#include "qconvex/exterior_operators.hpp"
#include "qconvex/parallel.hpp"

namespace qconvex {

namespace {

void check_params(const TorusParams& t) {
  if (t.n < 3 || t.n > kMaxDimension - 1) throw DomainError("torus: n must lie in [3, 15]");
  if (t.p < 1 || t.p > t.n - 1) throw DomainError("torus: p must lie in [1, n-1]");
  if (!(t.r > 0.0 && t.r < 1.0)) throw DomainError("torus: radius must lie in (0, 1), got " + std::to_string(t.r));
}

}  // namespace

PrincipalSpectrum torus_spectrum(const TorusParams& t) {
  check_params(t);
  const double s = std::sqrt(1.0 - t.r * t.r);
  std::vector<double> k(static_cast<std::size_t>(t.n));
  std::fill(k.begin(), k.begin() + t.p, -s / t.r);
  std::fill(k.begin() + t.p, k.end(), t.r / s);
  return PrincipalSpectrum(std::move(k));
}

double torus_mean_curvature(const TorusParams& t) {
  check_params(t);
  const double n = t.n;
  return (n * t.r * t.r - t.p) / (n * t.r * std::sqrt(1.0 - t.r * t.r));
}

double torus_qconvexity_threshold(int p, int q) {
  if (p < 1) throw DomainError("torus_qconvexity_threshold: p must be positive");
  if (q <= p) throw DomainError("torus_qconvexity_threshold: the torus is never q-convex for q <= p");
  return std::sqrt(static_cast<double>(p) / q);
}

bool admissible_torus_triple(int n, int p, int q) {
  return n >= 3 && p >= 1 && p < q && q <= n - 1 && p <= n - q;
}

std::vector<double> radius_grid(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("radius_grid: need at least one step");
  if (!(lo <= hi)) throw DomainError("radius_grid: empty interval");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return out;
}

std::vector<ScanRow> sharpness_scan(int n, int p, int q, std::span<const double> r_grid, const ScanOptions& options) {
  if (!admissible_torus_triple(n, p, q)) {
    throw DomainError("sharpness_scan: (n, p, q) = (" + std::to_string(n) + ", " + std::to_string(p) + ", " +
                      std::to_string(q) + ") is not admissible (need 1 <= p < q <= n-1, p <= n-q)");
  }
  if (r_grid.empty()) throw DomainError("sharpness_scan: empty radius grid");
  if (options.c < 0.0) throw DomainError("sharpness_scan: ambient constant must be nonnegative");
  const double lo = std::sqrt(static_cast<double>(p) / n) + kRadiusMargin;
  const double hi = 1.0 - kRadiusMargin;
  for (double r : r_grid) {
    if (options.enforce_radius_window && (r < lo || r > hi)) {
      throw DomainError("sharpness_scan: radius " + std::to_string(r) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
  }

  std::vector<ScanRow> rows(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    const TorusParams t{n, p, r_grid[i]};
    const auto k = torus_spectrum(t);
    ScanRow row;
    row.r = t.r;
    const auto m = qconvex_margin(k, q);
    row.margin = m.margin;
    row.convexity = m.status;
    row.mean_curvature = torus_mean_curvature(t);
    row.pinching_threshold = pinching_threshold(n, q, p, options.c);
    row.pinching_slack = row.mean_curvature - row.pinching_threshold;
    row.lambda_min = closed_form_values(k, p).front();
    row.tmin_bound = tmin_lower_bound(n, p, q, k.trace());
    row.bochner_bound = bochner_pointwise_bound(options.c, n, q, p, std::max(0.0, row.mean_curvature));
    row.rigidity = rigidity_check(k, p, q);
    rows[i] = row;
  });
  return rows;
}

}  // namespace qconvex
