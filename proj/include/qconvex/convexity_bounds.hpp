#pragma once

#include <optional>
#include <string_view>

#include "qconvex/principal_spectrum.hpp"

namespace qconvex {

enum class ConvexityStatus { strict, nonnegative, violated };

std::string_view to_string(ConvexityStatus s);

/// k_1 + … + k_q and its classification against an additive tolerance.
struct ConvexityMargin {
  int q = 0;
  double margin = 0.0;
  double tolerance = 0.0;
  ConvexityStatus status = ConvexityStatus::violated;

  /// q-nonnegativity implies q'-nonnegativity for every q' >= q.
  bool implies_order(int q_prime) const { return status != ConvexityStatus::violated && q_prime >= q; }
};

inline constexpr double kMarginToleranceScale = 1e-10;

/// Margin tolerance scale · (1 + max |k_i|); default 1e-10 · (1 + max |k_i|).
double default_margin_tolerance(const PrincipalSpectrum& k, double scale = kMarginToleranceScale);

/// Requires 1 <= q <= n. `tol` defaults to default_margin_tolerance(k).
ConvexityMargin qconvex_margin(const PrincipalSpectrum& k, int q, std::optional<double> tol = std::nullopt);

/// Sharp lower bound on the smallest eigenvalue of T_A^[p] for q-nonnegative A:
///   −(n−p)(q−p)/(n−q)² · (tr A)²  when p < q,  and 0 when p >= q.
/// Requires 1 <= p <= n−q for p < q, and p <= n−p for p >= q.
double tmin_lower_bound(int n, int p, int q, double trace);

enum class RigidityStatus { interior, boundary_rigid, invalid };

std::string_view to_string(RigidityStatus s);

/// Default rigidity tolerance 1e-10 · (1 + |tr A|).
double default_rigidity_tolerance(const PrincipalSpectrum& k);

/// Detects the equality shape of the T_A^[p] bound:
///   k_1 + … + k_p = −(q−p)/(n−q) · tr A   and   k_{p+1} = … = k_n = tr A/(n−q).
/// Returns `invalid` when k is not q-nonnegative.
RigidityStatus rigidity_check(const PrincipalSpectrum& k, int p, int q, std::optional<double> tol = std::nullopt);

/// Pointwise lower bound on 𝔅^[ℓ] for a q-convex hypersurface in an ambient
/// space whose (n−p)-average curvature-operator eigenvalue is >= c:
///   ℓ(n−ℓ) · (c − ((q−ℓ)/ℓ) · (n/(n−q))² · H²),   and ℓ(n−ℓ)·c for ℓ >= q.
double bochner_pointwise_bound(double c, int n, int q, int ell, double mean_curvature);

}  // namespace qconvex
