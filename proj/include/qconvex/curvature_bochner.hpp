#pragma once

#include <optional>
#include <vector>

#include "qconvex/exterior_operators.hpp"

namespace qconvex {

/// Tolerance for orthonormality of a tangent frame (max |FᵀF − I|).
inline constexpr double kFrameTolerance = 1e-10;

/// Symmetric operator on Λ²ℝⁿ in the basis e_i∧e_j (i < j, lexicographic),
/// which is declared orthonormal. This is the slot for algebraic curvature
/// operators; the unit sphere's curvature operator is the identity.
class TwoVectorOperator {
 public:
  TwoVectorOperator() = default;
  TwoVectorOperator(int n, Matrix entries);

  static TwoVectorOperator identity(int n);
  static TwoVectorOperator zero(int n);
  /// Diagonal in the pair basis; `values` has binom(n, 2) entries.
  static TwoVectorOperator diagonal(int n, std::span<const double> values);

  int dimension() const { return n_; }
  const Matrix& matrix() const { return entries_; }
  std::vector<MultiIndex> basis() const { return enumerate_basis(n_, 2); }
  /// Ascending eigenvalues.
  std::vector<double> eigenvalues() const { return symmetric_eigenvalues(entries_); }

 private:
  int n_ = 0;
  Matrix entries_;
};

/// Coefficients of a p-form in the increasing-tuple basis Θ_b (b in
/// enumerate_basis(n, p) order): ω = Σ_b coefficients[b] Θ_b.
struct PForm {
  int n = 0;
  int p = 0;
  Vector coefficients;

  static PForm basis_form(const MultiIndex& a);
};

/// Λ²-valued tensor ω̂: component(P, b) is the coefficient of e_i∧e_j
/// (P = (i, j)) in ω̂(e_b), i.e. ((e_i∧e_j) ω)(e_b).
struct HatTensor {
  int n = 0;
  int p = 0;
  /// binom(n,2) rows (pairs) × binom(n,p) columns (increasing tuples b).
  Matrix components;

  double operator()(const MultiIndex& pair, const MultiIndex& b) const;
};

/// The skew endomorphism e_i∧e_j : e_k ↦ δ_ik e_j − δ_jk e_i (1-based, i < j).
Matrix wedge_endomorphism(int i, int j, int n);

/// (L ω)(X_1,…,X_p) = −Σ_i ω(X_1,…,L X_i,…,X_p).
PForm form_derivation(const Matrix& l, const PForm& omega);

HatTensor hat(const PForm& omega);

/// 𝔅^[p] with ⟨𝔅ω, φ⟩ = Σ_{increasing b} ⟨R ω̂(e_b), φ̂(e_b)⟩. Requires 1 <= p <= n-1.
ExteriorOperator bochner_contract(const TwoVectorOperator& r, int p);

/// Curvature operator of the Gauss-equation quadratic term of a shape
/// operator A: entry [(i,j),(k,l)] = A_ik A_jl − A_il A_jk.
TwoVectorOperator extrinsic_operator(const SymmetricOperator& a);

/// Restriction of an ambient curvature operator to the wedges of an
/// orthonormal tangent frame. `frame` is N×m with orthonormal columns; the
/// ambient operator lives on Λ²ℝᴺ. Mixed tangent/normal wedges drop out.
TwoVectorOperator compress_ambient(const TwoVectorOperator& ambient, const Matrix& frame);

/// Mean of the m smallest eigenvalues.
double kyfan_average(const TwoVectorOperator& r, int m);
/// Same, for an already computed (ascending) eigenvalue list.
double kyfan_average(std::span<const double> ascending, int m);

struct GaussSplit {
  ExteriorOperator restricted;  ///< 𝔅_res: ambient part
  ExteriorOperator extrinsic;   ///< 𝔅_ext = T_A^[p]
  ExteriorOperator total;       ///< 𝔅 = 𝔅_res + 𝔅_ext
};

GaussSplit gauss_split(const TwoVectorOperator& ambient, const Matrix& frame, const SymmetricOperator& a, int p);

/// Ambient data for an (n+1)-manifold as seen by degree-p bounds: either the
/// full sorted curvature-operator spectrum or just a lower bound c on the
/// average of its n−p smallest eigenvalues.
class AmbientModel {
 public:
  static AmbientModel from_bound(int n, int p, double c);
  /// `eigenvalues` must be sorted ascending with binom(n+1, 2) entries.
  static AmbientModel from_eigenvalues(int n, int p, std::vector<double> eigenvalues);

  int dimension() const { return n_; }
  int degree() const { return p_; }
  double bound() const { return c_; }
  const std::optional<std::vector<double>>& eigenvalues() const { return eigenvalues_; }

  /// Asserted (not computed): the operator is (n−p)-positive at some point on
  /// the image of the hypersurface.
  bool strict_at_point() const { return strict_at_point_; }
  AmbientModel& assert_strict_at_point(bool flag = true) {
    strict_at_point_ = flag;
    return *this;
  }

 private:
  AmbientModel(int n, int p, double c) : n_(n), p_(p), c_(c) {}

  int n_ = 0;
  int p_ = 0;
  double c_ = 0.0;
  std::optional<std::vector<double>> eigenvalues_;
  bool strict_at_point_ = false;
};

}  // namespace qconvex
