#include "qconvex/convexity_bounds.hpp"

#include <cmath>
#include <string>

#include "qconvex/error.hpp"

namespace qconvex {

std::string_view to_string(ConvexityStatus s) {
  switch (s) {
    case ConvexityStatus::strict: return "strict";
    case ConvexityStatus::nonnegative: return "nonnegative";
    case ConvexityStatus::violated: return "violated";
  }
  return "unknown";
}

std::string_view to_string(RigidityStatus s) {
  switch (s) {
    case RigidityStatus::interior: return "interior";
    case RigidityStatus::boundary_rigid: return "boundary_rigid";
    case RigidityStatus::invalid: return "invalid";
  }
  return "unknown";
}

double default_margin_tolerance(const PrincipalSpectrum& k, double scale) { return scale * (1.0 + k.max_abs()); }

double default_rigidity_tolerance(const PrincipalSpectrum& k) { return 1e-10 * (1.0 + std::abs(k.trace())); }

ConvexityMargin qconvex_margin(const PrincipalSpectrum& k, int q, std::optional<double> tol) {
  const int n = k.dimension();
  if (q < 1 || q > n) {
    throw DomainError("qconvex_margin: q = " + std::to_string(q) + " outside [1, " + std::to_string(n) + "]");
  }
  ConvexityMargin out;
  out.q = q;
  out.margin = k.lowest_sum(q);
  out.tolerance = tol.value_or(default_margin_tolerance(k));
  if (out.margin > out.tolerance) {
    out.status = ConvexityStatus::strict;
  } else if (out.margin >= -out.tolerance) {
    out.status = ConvexityStatus::nonnegative;
  } else {
    out.status = ConvexityStatus::violated;
  }
  return out;
}

double tmin_lower_bound(int n, int p, int q, double trace) {
  if (n < 2) throw DomainError("tmin_lower_bound: n must be at least 2");
  if (q < 1 || q > n) throw DomainError("tmin_lower_bound: q outside [1, n]");
  if (p < 1) throw DomainError("tmin_lower_bound: p must be positive");
  if (p >= q) {
    // q-nonnegative implies p-nonnegative; the bound at order p needs p <= n-p.
    if (p > n - p) {
      throw DomainError("tmin_lower_bound: p = " + std::to_string(p) + " exceeds n - p; no bound at convexity order p");
    }
    return 0.0;
  }
  if (p > n - q) {
    throw DomainError("tmin_lower_bound: p = " + std::to_string(p) + " exceeds min{q, n-q} = " +
                      std::to_string(n - q));
  }
  const double nq = static_cast<double>(n - q);
  return -static_cast<double>(n - p) * static_cast<double>(q - p) / (nq * nq) * trace * trace;
}

RigidityStatus rigidity_check(const PrincipalSpectrum& k, int p, int q, std::optional<double> tol) {
  const int n = k.dimension();
  if (q < 1 || q > n - 1) throw DomainError("rigidity_check: q outside [1, n-1]");
  if (p < 1 || p > std::min(q, n - q)) throw DomainError("rigidity_check: p outside [1, min{q, n-q}]");
  if (qconvex_margin(k, q).status == ConvexityStatus::violated) return RigidityStatus::invalid;

  const double eps = tol.value_or(default_rigidity_tolerance(k));
  const double trace = k.trace();
  const double nq = static_cast<double>(n - q);
  const double head_target = -static_cast<double>(q - p) / nq * trace;
  if (std::abs(k.lowest_sum(p) - head_target) > eps) return RigidityStatus::interior;
  const double tail_target = trace / nq;
  for (int i = p; i < n; ++i) {
    if (std::abs(k[i] - tail_target) > eps) return RigidityStatus::interior;
  }
  return RigidityStatus::boundary_rigid;
}

double bochner_pointwise_bound(double c, int n, int q, int ell, double mean_curvature) {
  if (q >= n) throw DomainError("bochner_pointwise_bound: requires q <= n-1");
  if (ell < 1 || ell > n - 1) throw DomainError("bochner_pointwise_bound: ell outside [1, n-1]");
  const double weight = static_cast<double>(ell) * static_cast<double>(n - ell);
  if (ell >= q) return weight * c;
  const double ratio = static_cast<double>(n) / static_cast<double>(n - q);
  const double penalty = static_cast<double>(q - ell) / ell * ratio * ratio * mean_curvature * mean_curvature;
  return weight * (c - penalty);
}

}  // namespace qconvex
