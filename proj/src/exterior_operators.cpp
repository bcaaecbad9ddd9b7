#include "qconvex/exterior_operators.hpp"

#include <algorithm>
#include <string>

#include "qconvex/error.hpp"

namespace qconvex {

SymmetricOperator::SymmetricOperator(Matrix entries) : entries_(std::move(entries)) {
  require_symmetric(entries_, "SymmetricOperator");
  if (entries_.rows() < 1 || entries_.rows() > kMaxDimension) {
    throw DomainError("SymmetricOperator: dimension " + std::to_string(entries_.rows()) +
                      " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
}

SymmetricOperator SymmetricOperator::identity(int n) {
  return SymmetricOperator(Matrix::Identity(n, n));
}

SymmetricOperator SymmetricOperator::zero(int n) { return SymmetricOperator(Matrix::Zero(n, n)); }

SymmetricOperator SymmetricOperator::diagonal(std::span<const double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = values[i];
  }
  return SymmetricOperator(std::move(m));
}

PrincipalSpectrum SymmetricOperator::eigenvalues() const {
  return PrincipalSpectrum(symmetric_eigenvalues(entries_));
}

ExteriorOperator::ExteriorOperator(int n, int p, Matrix entries) : n_(n), p_(p), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxDimension || p < 1 || p > n) {
    throw DomainError("ExteriorOperator: invalid (n, p) = (" + std::to_string(n) + ", " + std::to_string(p) + ")");
  }
  const auto dim = static_cast<Eigen::Index>(binomial(n, p));
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw DomainError("ExteriorOperator: expected " + std::to_string(dim) + "x" + std::to_string(dim) + " entries");
  }
  require_symmetric(entries_, "ExteriorOperator");
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
}

double ExteriorOperator::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.dimension() != n_ || b.dimension() != n_ || a.size() != p_ || b.size() != p_) {
    throw DomainError("ExteriorOperator: multi-index does not belong to this basis");
  }
  return entries_(static_cast<Eigen::Index>(lexicographic_rank(a)), static_cast<Eigen::Index>(lexicographic_rank(b)));
}

namespace {

void check_degree(int n, int p, const char* what) {
  if (p < 1 || p > n) {
    throw DomainError(std::string(what) + ": degree p = " + std::to_string(p) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  if (binomial(n, p) > kMaxExteriorDimension) {
    throw DomainError(std::string(what) + ": binom(n, p) exceeds dense limit");
  }
}

}  // namespace

Matrix derivation_matrix(const Matrix& m, int p) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != m.rows()) throw DomainError("derivation_matrix: matrix must be square");
  check_degree(n, p, "derivation_matrix");
  const auto basis = enumerate_basis(n, p);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix out = Matrix::Zero(dim, dim);

  std::vector<int> tuple(static_cast<std::size_t>(p));
  for (Eigen::Index row = 0; row < dim; ++row) {
    const MultiIndex& a = basis[static_cast<std::size_t>(row)];
    for (int pos = 0; pos < p; ++pos) {
      const int slot = a[pos];
      for (int target = 1; target <= n; ++target) {
        const double coeff = m(target - 1, slot - 1);
        if (coeff == 0.0) continue;
        if (target != slot && a.contains(target)) continue;  // repeated vector
        std::copy(a.elements().begin(), a.elements().end(), tuple.begin());
        tuple[static_cast<std::size_t>(pos)] = target;
        const int sign = permutation_sign(tuple);
        std::vector<int> sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        const auto col = static_cast<Eigen::Index>(lexicographic_rank(MultiIndex(n, std::move(sorted))));
        out(row, col) += sign * coeff;
      }
    }
  }
  return out;
}

ExteriorOperator extend(const SymmetricOperator& a, int p) {
  check_degree(a.dimension(), p, "extend");
  return ExteriorOperator(a.dimension(), p, derivation_matrix(a.matrix(), p));
}

ExteriorOperator weitzenbock_extension(const SymmetricOperator& a, int p) {
  check_degree(a.dimension(), p, "weitzenbock_extension");
  const Matrix ext = derivation_matrix(a.matrix(), p);
  Matrix t = a.trace() * ext - ext * ext;
  return ExteriorOperator(a.dimension(), p, std::move(t));
}

std::vector<BasisEigenvalue> closed_form_spectrum(const PrincipalSpectrum& k, int p) {
  const int n = k.dimension();
  check_degree(n, p, "closed_form_spectrum");
  std::vector<BasisEigenvalue> out;
  for (auto& a : enumerate_basis(n, p)) {
    const double ka = index_sum(a, k);
    const double kstar = index_sum(star_complement(a, n), k);
    out.push_back({std::move(a), ka * kstar});
  }
  return out;
}

std::vector<double> closed_form_values(const PrincipalSpectrum& k, int p) {
  std::vector<double> values;
  for (const auto& e : closed_form_spectrum(k, p)) values.push_back(e.value);
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<double> dense_spectrum(const ExteriorOperator& t) { return symmetric_eigenvalues(t.matrix()); }

}  // namespace qconvex
