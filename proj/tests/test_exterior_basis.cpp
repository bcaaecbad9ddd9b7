#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qconvex/error.hpp"
#include "qconvex/exterior_basis.hpp"

using namespace qconvex;

TEST_CASE("binomial agrees with Pascal's triangle") {
  const auto t = oracle::pascal(kMaxDimension);
  for (int n = 0; n <= kMaxDimension; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == t[n][k]);
    CHECK(binomial(n, n + 1) == 0);
    CHECK(binomial(n, -1) == 0);
  }
}

TEST_CASE("enumerate_basis lists every p-subset in lexicographic order") {
  for (int n = 1; n <= 9; ++n) {
    for (int p = 1; p <= n; ++p) {
      const auto basis = enumerate_basis(n, p);
      const auto expected = oracle::subsets(n, p);
      REQUIRE(basis.size() == expected.size());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].elements() == expected[i]);
        CHECK(lexicographic_rank(basis[i]) == i);
      }
    }
  }
}

TEST_CASE("enumerate_basis small cases") {
  const auto b = enumerate_basis(4, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0].to_string() == "{1,2}");
  CHECK(b[5].to_string() == "{3,4}");
  CHECK(enumerate_basis(3, 3).size() == 1);
  CHECK_THROWS_AS(enumerate_basis(4, 0), DomainError);
  CHECK_THROWS_AS(enumerate_basis(4, 5), DomainError);
}

TEST_CASE("rank at the largest dimension uses the combinatorial number system") {
  const auto basis = enumerate_basis(16, 3);
  CHECK(basis.size() == 560);
  CHECK(lexicographic_rank(basis.back()) == 559);
  CHECK(lexicographic_rank(MultiIndex(16, {1, 2, 16})) == 13);
}

TEST_CASE("MultiIndex validation and mask") {
  CHECK_THROWS_AS(MultiIndex(4, {2, 2}), DomainError);
  CHECK_THROWS_AS(MultiIndex(4, {3, 1}), DomainError);
  CHECK_THROWS_AS(MultiIndex(4, {0, 1}), DomainError);
  CHECK_THROWS_AS(MultiIndex(4, {5}), DomainError);
  CHECK_THROWS_AS(MultiIndex(17, {1}), DomainError);
  const MultiIndex a(6, {1, 3, 6});
  CHECK(a.mask() == 0b100101U);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
}

TEST_CASE("star_complement partitions the index set") {
  for (int n = 2; n <= 7; ++n) {
    for (int p = 1; p < n; ++p) {
      for (const auto& a : enumerate_basis(n, p)) {
        const auto c = star_complement(a, n);
        CHECK(c.size() == n - p);
        CHECK((a.mask() & c.mask()) == 0U);
        CHECK((a.mask() | c.mask()) == (1U << n) - 1U);
      }
    }
  }
  CHECK(star_complement(MultiIndex(3, {1, 2, 3}), 3).size() == 0);
  CHECK(star_complement(MultiIndex(4, {2, 4}), 4).elements() == std::vector<int>{1, 3});
}

TEST_CASE("index_sum matches hand sums") {
  const PrincipalSpectrum k({-1.0, 1.0, 2.0, 3.0});
  CHECK(index_sum(MultiIndex(4, {1, 3}), k) == doctest::Approx(1.0));
  CHECK(index_sum(MultiIndex(4, {2, 3, 4}), k) == doctest::Approx(6.0));
  CHECK(index_sum(MultiIndex(4, {1}), k) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(index_sum(MultiIndex(5, {1}), k), DomainError);

  const std::vector<double> raw{-1.0, 1.0, 2.0, 3.0};
  for (int p = 1; p <= 4; ++p) {
    for (const auto& a : enumerate_basis(4, p)) CHECK(index_sum(a, k) == doctest::Approx(oracle::subset_sum(a.elements(), raw)));
  }
}

TEST_CASE("permutation_sign matches inversion parity") {
  std::vector<int> t{1, 2, 3, 4, 5};
  do {
    CHECK(permutation_sign(t) == oracle::inversion_sign(t));
  } while (std::next_permutation(t.begin(), t.end()));
  const std::vector<int> repeated{1, 3, 1};
  CHECK(permutation_sign(repeated) == 0);
  CHECK(permutation_sign(std::vector<int>{}) == 1);
}

TEST_CASE("PrincipalSpectrum sorts and summarizes") {
  const PrincipalSpectrum k({3.0, -1.0, 2.0, 1.0});
  CHECK(k[0] == -1.0);
  CHECK(k[3] == 3.0);
  CHECK(k.trace() == doctest::Approx(5.0));
  CHECK(k.mean_curvature() == doctest::Approx(1.25));
  CHECK(k.lowest_sum(2) == doctest::Approx(0.0));
  CHECK(k.max_abs() == 3.0);
  CHECK_THROWS_AS(PrincipalSpectrum(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(PrincipalSpectrum({1.0, std::nan("")}), DomainError);
  CHECK_THROWS_AS(k.lowest_sum(5), DomainError);
}
