#include "qconvex/curvature_bochner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qconvex/error.hpp"

namespace qconvex {

TwoVectorOperator::TwoVectorOperator(int n, Matrix entries) : n_(n), entries_(std::move(entries)) {
  if (n < 2 || n > kMaxDimension) throw DomainError("TwoVectorOperator: dimension out of range");
  const auto dim = static_cast<Eigen::Index>(binomial(n, 2));
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw DomainError("TwoVectorOperator: expected " + std::to_string(dim) + "x" + std::to_string(dim) + " entries");
  }
  require_symmetric(entries_, "TwoVectorOperator");
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
}

TwoVectorOperator TwoVectorOperator::identity(int n) {
  const auto dim = static_cast<Eigen::Index>(binomial(n, 2));
  return TwoVectorOperator(n, Matrix::Identity(dim, dim));
}

TwoVectorOperator TwoVectorOperator::zero(int n) {
  const auto dim = static_cast<Eigen::Index>(binomial(n, 2));
  return TwoVectorOperator(n, Matrix::Zero(dim, dim));
}

TwoVectorOperator TwoVectorOperator::diagonal(int n, std::span<const double> values) {
  const auto dim = static_cast<Eigen::Index>(binomial(n, 2));
  if (static_cast<Eigen::Index>(values.size()) != dim) {
    throw DomainError("TwoVectorOperator::diagonal: expected " + std::to_string(dim) + " values");
  }
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return TwoVectorOperator(n, std::move(m));
}

PForm PForm::basis_form(const MultiIndex& a) {
  const int n = a.dimension();
  const int p = a.size();
  Vector c = Vector::Zero(static_cast<Eigen::Index>(binomial(n, p)));
  c(static_cast<Eigen::Index>(lexicographic_rank(a))) = 1.0;
  return {n, p, std::move(c)};
}

double HatTensor::operator()(const MultiIndex& pair, const MultiIndex& b) const {
  if (pair.size() != 2 || pair.dimension() != n || b.dimension() != n || b.size() != p) {
    throw DomainError("HatTensor: index does not match tensor shape");
  }
  return components(static_cast<Eigen::Index>(lexicographic_rank(pair)),
                    static_cast<Eigen::Index>(lexicographic_rank(b)));
}

Matrix wedge_endomorphism(int i, int j, int n) {
  if (n < 2 || n > kMaxDimension) throw DomainError("wedge_endomorphism: dimension out of range");
  if (i < 1 || j > n || i >= j) {
    throw DomainError("wedge_endomorphism: need 1 <= i < j <= n, got (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
  }
  Matrix l = Matrix::Zero(n, n);
  l(j - 1, i - 1) = 1.0;   // e_i ↦ e_j
  l(i - 1, j - 1) = -1.0;  // e_j ↦ −e_i
  return l;
}

PForm form_derivation(const Matrix& l, const PForm& omega) {
  if (l.rows() != omega.n || l.cols() != omega.n) throw DomainError("form_derivation: dimension mismatch");
  if (omega.coefficients.size() != static_cast<Eigen::Index>(binomial(omega.n, omega.p))) {
    throw DomainError("form_derivation: coefficient count does not match binom(n, p)");
  }
  return {omega.n, omega.p, -(derivation_matrix(l, omega.p) * omega.coefficients)};
}

HatTensor hat(const PForm& omega) {
  const int n = omega.n;
  const auto pairs = enumerate_basis(n, 2);
  HatTensor out{n, omega.p, Matrix(static_cast<Eigen::Index>(pairs.size()), omega.coefficients.size())};
  for (std::size_t row = 0; row < pairs.size(); ++row) {
    const PForm lw = form_derivation(wedge_endomorphism(pairs[row][0], pairs[row][1], n), omega);
    out.components.row(static_cast<Eigen::Index>(row)) = lw.coefficients.transpose();
  }
  return out;
}

ExteriorOperator bochner_contract(const TwoVectorOperator& r, int p) {
  const int n = r.dimension();
  if (p < 1 || p > n - 1) {
    throw DomainError("bochner_contract: degree p = " + std::to_string(p) + " outside [1, " +
                      std::to_string(n - 1) + "]");
  }
  const auto basis = enumerate_basis(n, p);
  std::vector<Matrix> hats;
  hats.reserve(basis.size());
  for (const auto& a : basis) hats.push_back(hat(PForm::basis_form(a)).components);

  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix out(dim, dim);
  for (Eigen::Index d = 0; d < dim; ++d) {
    const Matrix rd = r.matrix() * hats[static_cast<std::size_t>(d)];
    for (Eigen::Index c = 0; c <= d; ++c) {
      // Σ_b ⟨R φ̂(e_b), ω̂(e_b)⟩ = Frobenius product over pairs × tuples
      const double v = hats[static_cast<std::size_t>(c)].cwiseProduct(rd).sum();
      out(c, d) = v;
      out(d, c) = v;
    }
  }
  return ExteriorOperator(n, p, std::move(out));
}

TwoVectorOperator extrinsic_operator(const SymmetricOperator& a) {
  const int n = a.dimension();
  if (n < 2) throw DomainError("extrinsic_operator: dimension must be at least 2");
  const auto pairs = enumerate_basis(n, 2);
  const auto dim = static_cast<Eigen::Index>(pairs.size());
  const Matrix& m = a.matrix();
  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const int i = pairs[static_cast<std::size_t>(r)][0] - 1;
    const int j = pairs[static_cast<std::size_t>(r)][1] - 1;
    for (Eigen::Index c = 0; c < dim; ++c) {
      const int k = pairs[static_cast<std::size_t>(c)][0] - 1;
      const int l = pairs[static_cast<std::size_t>(c)][1] - 1;
      out(r, c) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
    }
  }
  return TwoVectorOperator(n, std::move(out));
}

TwoVectorOperator compress_ambient(const TwoVectorOperator& ambient, const Matrix& frame) {
  const int big = ambient.dimension();
  const int m = static_cast<int>(frame.cols());
  if (frame.rows() != big) {
    throw DomainError("compress_ambient: frame vectors have " + std::to_string(frame.rows()) +
                      " components, ambient dimension is " + std::to_string(big));
  }
  if (m < 2 || m > big) throw DomainError("compress_ambient: frame must hold between 2 and N vectors");
  const double ortho = (frame.transpose() * frame - Matrix::Identity(m, m)).cwiseAbs().maxCoeff();
  if (ortho > kFrameTolerance) {
    throw DomainError("compress_ambient: frame is not orthonormal (deviation " + std::to_string(ortho) + ")");
  }

  // Column (i,j) holds the ambient pair-basis coordinates of f_i ∧ f_j.
  const auto ambient_pairs = enumerate_basis(big, 2);
  const auto tangent_pairs = enumerate_basis(m, 2);
  Matrix wedges(static_cast<Eigen::Index>(ambient_pairs.size()), static_cast<Eigen::Index>(tangent_pairs.size()));
  for (std::size_t c = 0; c < tangent_pairs.size(); ++c) {
    const int i = tangent_pairs[c][0] - 1;
    const int j = tangent_pairs[c][1] - 1;
    for (std::size_t r = 0; r < ambient_pairs.size(); ++r) {
      const int a = ambient_pairs[r][0] - 1;
      const int b = ambient_pairs[r][1] - 1;
      wedges(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          frame(a, i) * frame(b, j) - frame(b, i) * frame(a, j);
    }
  }
  Matrix compressed = wedges.transpose() * ambient.matrix() * wedges;
  compressed = 0.5 * (compressed + compressed.transpose()).eval();
  return TwoVectorOperator(m, std::move(compressed));
}

double kyfan_average(std::span<const double> ascending, int m) {
  if (m < 1 || m > static_cast<int>(ascending.size())) {
    throw DomainError("kyfan_average: m = " + std::to_string(m) + " outside [1, " +
                      std::to_string(ascending.size()) + "]");
  }
  return std::accumulate(ascending.begin(), ascending.begin() + m, 0.0) / m;
}

double kyfan_average(const TwoVectorOperator& r, int m) {
  const auto ev = r.eigenvalues();
  return kyfan_average(ev, m);
}

GaussSplit gauss_split(const TwoVectorOperator& ambient, const Matrix& frame, const SymmetricOperator& a, int p) {
  if (frame.cols() != a.dimension()) {
    throw DomainError("gauss_split: frame has " + std::to_string(frame.cols()) +
                      " vectors but the shape operator acts on dimension " + std::to_string(a.dimension()));
  }
  ExteriorOperator restricted = bochner_contract(compress_ambient(ambient, frame), p);
  ExteriorOperator extrinsic = bochner_contract(extrinsic_operator(a), p);
  ExteriorOperator total(a.dimension(), p, restricted.matrix() + extrinsic.matrix());
  return {std::move(restricted), std::move(extrinsic), std::move(total)};
}

AmbientModel AmbientModel::from_bound(int n, int p, double c) {
  if (n < 2 || n > kMaxDimension - 1) throw DomainError("AmbientModel: hypersurface dimension out of range");
  if (p < 1 || p > n - 1) throw DomainError("AmbientModel: degree p must lie in [1, n-1]");
  if (!std::isfinite(c)) throw DomainError("AmbientModel: bound must be finite");
  return AmbientModel(n, p, c);
}

AmbientModel AmbientModel::from_eigenvalues(int n, int p, std::vector<double> eigenvalues) {
  if (n < 2 || n > kMaxDimension - 1) throw DomainError("AmbientModel: hypersurface dimension out of range");
  if (p < 1 || p > n - 1) throw DomainError("AmbientModel: degree p must lie in [1, n-1]");
  const std::size_t expected = binomial(n + 1, 2);
  if (eigenvalues.size() != expected) {
    throw DomainError("AmbientModel: expected " + std::to_string(expected) + " curvature-operator eigenvalues, got " +
                      std::to_string(eigenvalues.size()));
  }
  for (double v : eigenvalues) {
    if (!std::isfinite(v)) throw DomainError("AmbientModel: non-finite eigenvalue");
  }
  if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end())) {
    throw DomainError("AmbientModel: eigenvalues must be sorted ascending");
  }
  AmbientModel model(n, p, kyfan_average(eigenvalues, n - p));
  model.eigenvalues_ = std::move(eigenvalues);
  return model;
}

}  // namespace qconvex
