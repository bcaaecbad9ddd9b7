#include "qconvex/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qconvex/error.hpp"

namespace qconvex {

bool is_symmetric(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  const double scale = m.cwiseAbs().maxCoeff();
  const double skew = (m - m.transpose()).cwiseAbs().maxCoeff();
  return skew <= rel_tol * scale;
}

void require_symmetric(const Matrix& m, const char* what, double rel_tol) {
  if (m.rows() != m.cols()) {
    throw DomainError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", expected square");
  }
  if (!is_symmetric(m, rel_tol)) {
    throw DomainError(std::string(what) + ": matrix is not symmetric within relative tolerance " +
                      std::to_string(rel_tol));
  }
}

std::vector<double> symmetric_eigenvalues(const Matrix& m, double rel_tol) {
  require_symmetric(m, "symmetric_eigenvalues", rel_tol);
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("symmetric eigensolver did not converge");
  const Vector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double max_entry_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("max_entry_deviation: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

namespace {

std::vector<double> sorted_copy(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

double spectral_deviation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("spectral_deviation: size mismatch");
  const auto sa = sorted_copy(a);
  const auto sb = sorted_copy(b);
  double dev = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) dev = std::max(dev, std::abs(sa[i] - sb[i]));
  return dev;
}

bool spectra_match(std::span<const double> a, std::span<const double> b, double rel_tol) {
  if (a.size() != b.size()) return false;
  double scale = 1.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (double v : b) scale = std::max(scale, std::abs(v));
  return spectral_deviation(a, b) <= rel_tol * scale;
}

}  // namespace qconvex
