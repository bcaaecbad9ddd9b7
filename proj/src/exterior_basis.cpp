#include "qconvex/exterior_basis.hpp"

#include <sstream>

#include "qconvex/error.hpp"

namespace qconvex {

MultiIndex::MultiIndex(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  if (n < 1 || n > kMaxDimension) {
    throw DomainError("multi-index dimension " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxDimension) + "]");
  }
  int prev = 0;
  for (int e : elements_) {
    if (e <= prev || e > n) {
      throw DomainError("multi-index " + to_string() + " is not strictly increasing in [1, " +
                        std::to_string(n) + "]");
    }
    mask_ |= 1U << (e - 1);
    prev = e;
  }
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out << ',';
    out << elements_[i];
  }
  out << '}';
  return out.str();
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<MultiIndex> enumerate_basis(int n, int p) {
  if (n < 1 || n > kMaxDimension) throw DomainError("enumerate_basis: n out of range");
  if (p < 1 || p > n) {
    throw DomainError("enumerate_basis: p = " + std::to_string(p) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  std::vector<MultiIndex> out;
  out.reserve(binomial(n, p));
  std::vector<int> cur(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    // advance to the next combination in lexicographic order
    int pos = p - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - p + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < p; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t lexicographic_rank(const MultiIndex& a) {
  // Count subsets that precede `a`: at each position, all choices smaller than
  // the actual element (and larger than the previous one) contribute a block.
  const int n = a.dimension();
  const int p = a.size();
  std::size_t rank = 0;
  int prev = 0;
  for (int pos = 0; pos < p; ++pos) {
    for (int v = prev + 1; v < a[pos]; ++v) rank += binomial(n - v, p - pos - 1);
    prev = a[pos];
  }
  return rank;
}

MultiIndex star_complement(const MultiIndex& a, int n) {
  if (a.dimension() != n) throw DomainError("star_complement: dimension mismatch");
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n - a.size()));
  for (int i = 1; i <= n; ++i) {
    if (!a.contains(i)) rest.push_back(i);
  }
  return MultiIndex(n, std::move(rest));
}

double index_sum(const MultiIndex& a, const PrincipalSpectrum& k) {
  if (a.dimension() != k.dimension()) {
    throw DomainError("index_sum: multi-index dimension " + std::to_string(a.dimension()) +
                      " vs spectrum dimension " + std::to_string(k.dimension()));
  }
  double s = 0.0;
  for (int e : a.elements()) s += k[e - 1];
  return s;
}

int permutation_sign(std::span<const int> tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace qconvex
