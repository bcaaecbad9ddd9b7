#include "qconvex/principal_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qconvex/error.hpp"

namespace qconvex {

PrincipalSpectrum::PrincipalSpectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("principal spectrum must be non-empty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("principal spectrum contains a non-finite value");
  }
  std::sort(values_.begin(), values_.end());
  trace_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

double PrincipalSpectrum::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double PrincipalSpectrum::lowest_sum(int m) const {
  if (m < 0 || m > dimension()) throw DomainError("lowest_sum: count out of range");
  return std::accumulate(values_.begin(), values_.begin() + m, 0.0);
}

}  // namespace qconvex
