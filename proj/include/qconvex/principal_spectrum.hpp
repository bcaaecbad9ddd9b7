#pragma once

#include <span>
#include <vector>

namespace qconvex {

/// Eigenvalues k_1 <= ... <= k_n of a self-adjoint operator (for hypersurface
/// data: principal curvatures of the shape operator), with their trace nH.
class PrincipalSpectrum {
 public:
  PrincipalSpectrum() = default;
  /// Sorts the input. Throws DomainError on empty or non-finite input.
  explicit PrincipalSpectrum(std::vector<double> values);

  int dimension() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  double trace() const { return trace_; }
  /// Normalized mean curvature H = trace / n.
  double mean_curvature() const { return trace_ / static_cast<double>(values_.size()); }
  double max_abs() const;

  /// Sum of the m smallest values.
  double lowest_sum(int m) const;

  friend bool operator==(const PrincipalSpectrum&, const PrincipalSpectrum&) = default;

 private:
  std::vector<double> values_;
  double trace_ = 0.0;
};

}  // namespace qconvex
