#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace qconvex {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default relative tolerance for symmetry checks on stored operators.
inline constexpr double kSymmetryTolerance = 1e-12;

/// max |M - Mᵀ| <= rel_tol * max |M|.
bool is_symmetric(const Matrix& m, double rel_tol = kSymmetryTolerance);

/// Throws DomainError naming `what` if `m` is not square and symmetric.
void require_symmetric(const Matrix& m, const char* what, double rel_tol = kSymmetryTolerance);

/// All eigenvalues of a symmetric matrix, ascending (dense self-adjoint solver).
std::vector<double> symmetric_eigenvalues(const Matrix& m, double rel_tol = kSymmetryTolerance);

/// Largest absolute entry of a - b; matrices must have equal shape.
double max_entry_deviation(const Matrix& a, const Matrix& b);

/// Multiset comparison of two spectra: both are sorted, then paired entry by
/// entry and compared with tolerance rel_tol * max(1, largest |value|).
bool spectra_match(std::span<const double> a, std::span<const double> b, double rel_tol);

/// Largest |a_i - b_i| after sorting both lists (sizes must agree).
double spectral_deviation(std::span<const double> a, std::span<const double> b);

}  // namespace qconvex
