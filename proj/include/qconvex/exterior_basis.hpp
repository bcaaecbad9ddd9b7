#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qconvex/principal_spectrum.hpp"

namespace qconvex {

/// Largest ambient dimension for which exterior spaces are built densely.
inline constexpr int kMaxDimension = 16;

/// A p-element subset {i_1 < ... < i_p} of {1, ..., n}, 1-based.
///
/// The induced covector basis of Λᵖ V* is indexed by these sets; position in
/// enumerate_basis(n, p) is lexicographic in the element lists.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws DomainError unless `elements` is strictly increasing within [1, n].
  MultiIndex(int n, std::vector<int> elements);

  int dimension() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  int operator[](int pos) const { return elements_[static_cast<std::size_t>(pos)]; }

  bool contains(int i) const { return (mask_ >> (i - 1)) & 1U; }
  /// Bit i-1 set iff i is an element.
  std::uint32_t mask() const { return mask_; }

  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_ = 0;
  std::vector<int> elements_;
  std::uint32_t mask_ = 0;
};

/// Binomial coefficient, exact for the n <= kMaxDimension range.
std::size_t binomial(int n, int k);

/// All p-subsets of {1..n} in lexicographic order. Requires 1 <= p <= n <= kMaxDimension.
std::vector<MultiIndex> enumerate_basis(int n, int p);

/// Ordinal of `a` inside enumerate_basis(a.dimension(), a.size()).
std::size_t lexicographic_rank(const MultiIndex& a);

/// {1..n} \ a.  The empty set is returned for a full index set.
MultiIndex star_complement(const MultiIndex& a, int n);

/// K_a = Σ_{i∈a} k_i, the p-algebraic curvature. Throws on dimension mismatch.
double index_sum(const MultiIndex& a, const PrincipalSpectrum& k);

/// Sign (+1/-1) of the permutation sorting `tuple`, or 0 if it repeats an entry.
int permutation_sign(std::span<const int> tuple);

}  // namespace qconvex
