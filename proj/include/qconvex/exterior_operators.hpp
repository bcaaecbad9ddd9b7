#pragma once

#include <vector>

#include "qconvex/exterior_basis.hpp"
#include "qconvex/linalg.hpp"
#include "qconvex/principal_spectrum.hpp"

namespace qconvex {

/// Exterior spaces larger than this are rejected (dense storage only).
inline constexpr std::size_t kMaxExteriorDimension = 5000;

/// Self-adjoint endomorphism of ℝⁿ with respect to the standard inner product.
class SymmetricOperator {
 public:
  SymmetricOperator() = default;
  /// Throws DomainError unless `entries` is square and symmetric (1e-12 relative).
  explicit SymmetricOperator(Matrix entries);

  static SymmetricOperator identity(int n);
  static SymmetricOperator zero(int n);
  static SymmetricOperator diagonal(std::span<const double> values);

  int dimension() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  double trace() const { return entries_.trace(); }
  PrincipalSpectrum eigenvalues() const;

 private:
  Matrix entries_;
};

/// Symmetric operator on Λᵖ V* written in the basis Θ_a = θ_{i_1}∧…∧θ_{i_p},
/// a ranging over enumerate_basis(n, p). That basis is orthonormal for the
/// natural inner product on forms.
class ExteriorOperator {
 public:
  ExteriorOperator() = default;
  /// Throws DomainError on wrong shape or asymmetric entries.
  ExteriorOperator(int n, int p, Matrix entries);

  int dimension() const { return n_; }
  int degree() const { return p_; }
  const Matrix& matrix() const { return entries_; }
  std::vector<MultiIndex> basis() const { return enumerate_basis(n_, p_); }

  double operator()(const MultiIndex& a, const MultiIndex& b) const;

 private:
  int n_ = 0;
  int p_ = 0;
  Matrix entries_;
};

/// Matrix of the derivation M ↦ M^[p] on p-forms, for any (not necessarily
/// symmetric) n×n matrix M:
///   (M^[p] ω)(v_1,…,v_p) = Σ_i ω(v_1,…,M v_i,…,v_p).
/// Row/column ordering follows enumerate_basis(n, p).
Matrix derivation_matrix(const Matrix& m, int p);

/// A^[p], the extension of A to Λᵖ V* as a derivation.
ExteriorOperator extend(const SymmetricOperator& a, int p);

/// T_A^[p] = (tr A) A^[p] − A^[p] ∘ A^[p].
ExteriorOperator weitzenbock_extension(const SymmetricOperator& a, int p);

struct BasisEigenvalue {
  MultiIndex index;
  double value = 0.0;
};

/// Eigenpairs of T_A^[p] for any A with eigenvalues k: λ_a = K_a · K_{★a},
/// listed in basis order.
std::vector<BasisEigenvalue> closed_form_spectrum(const PrincipalSpectrum& k, int p);

/// Values of closed_form_spectrum, sorted ascending.
std::vector<double> closed_form_values(const PrincipalSpectrum& k, int p);

/// All eigenvalues of T, ascending, from a dense symmetric eigensolver.
std::vector<double> dense_spectrum(const ExteriorOperator& t);

}  // namespace qconvex
