#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qconvex/curvature_bochner.hpp"
#include "qconvex/error.hpp"
#include "qconvex/sampling.hpp"

using namespace qconvex;

namespace {

/// (L ω)(e_b) = −Σ_i ω(e_{b_1}, …, L e_{b_i}, …, e_{b_p}), evaluated with determinants.
Vector derivation_by_evaluation(const Matrix& l, int n, int p, const Vector& omega) {
  const auto basis = oracle::subsets(n, p);
  Vector out(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < basis[b].size(); ++i) {
      Matrix v = oracle::unit_columns(n, basis[b]);
      v.col(static_cast<Eigen::Index>(i)) = l.col(basis[b][i] - 1);
      s += oracle::evaluate_form(n, p, omega, v);
    }
    out[static_cast<Eigen::Index>(b)] = -s;
  }
  return out;
}

Matrix pair_diagonal(const std::vector<double>& k) {
  const int n = static_cast<int>(k.size());
  const auto pairs = oracle::subsets(n, 2);
  Matrix d = Matrix::Zero(static_cast<Eigen::Index>(pairs.size()), static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) = k[pairs[r][0] - 1] * k[pairs[r][1] - 1];
  }
  return d;
}

}  // namespace

TEST_CASE("wedge_endomorphism examples") {
  const Matrix l = wedge_endomorphism(1, 2, 2);
  Matrix expected(2, 2);
  expected << 0.0, -1.0, 1.0, 0.0;
  CHECK(l == expected);

  const Matrix l13 = wedge_endomorphism(1, 3, 3);
  CHECK((l13 * Vector::Unit(3, 1)).isZero());
  CHECK(l13 * Vector::Unit(3, 0) == Vector::Unit(3, 2));
  CHECK(l13 * Vector::Unit(3, 2) == -Vector::Unit(3, 0));

  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      const Matrix w = wedge_endomorphism(i, j, 6);
      CHECK((w + w.transpose()).isZero());
    }
  }
  CHECK_THROWS_AS(wedge_endomorphism(2, 2, 3), DomainError);
  CHECK_THROWS_AS(wedge_endomorphism(3, 1, 3), DomainError);
}

TEST_CASE("form_derivation follows the leading-minus definition") {
  // (Lθ_1)(e_2) = −θ_1(L e_2) = −θ_1(−e_1) = 1, so Lθ_1 = +θ_2.
  const PForm theta1{2, 1, Vector::Unit(2, 0)};
  const PForm out = form_derivation(wedge_endomorphism(1, 2, 2), theta1);
  CHECK(out.coefficients[0] == 0.0);
  CHECK(out.coefficients[1] == 1.0);

  CHECK(form_derivation(Matrix::Zero(4, 4), PForm{4, 2, Vector::Ones(6)}).coefficients.isZero());
  CHECK_THROWS_AS(form_derivation(Matrix::Zero(3, 3), theta1), DomainError);
}

TEST_CASE("form_derivation agrees with determinant evaluation for random skew maps and forms") {
  Rng rng(3);
  for (int n = 2; n <= 5; ++n) {
    for (int p = 1; p <= n; ++p) {
      Matrix g(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
      }
      const Matrix l = g - g.transpose();
      Vector omega(static_cast<Eigen::Index>(binomial(n, p)));
      for (Eigen::Index i = 0; i < omega.size(); ++i) omega[i] = rng.uniform(-1.0, 1.0);
      const auto got = form_derivation(l, PForm{n, p, omega}).coefficients;
      CHECK((got - derivation_by_evaluation(l, n, p, omega)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("hat of Θ_{1,2} in dimension 3") {
  const auto h = hat(PForm::basis_form(MultiIndex(3, {1, 2})));
  // ((e_1∧e_3)(θ_1∧θ_2))(e_2, e_3) = −(θ_1∧θ_2)(e_2, −e_1) = −1
  CHECK(h(MultiIndex(3, {1, 3}), MultiIndex(3, {2, 3})) == -1.0);
  CHECK(h(MultiIndex(3, {1, 2}), MultiIndex(3, {1, 2})) == 0.0);
  CHECK(hat(PForm{3, 2, Vector::Zero(3)}).components.isZero());
}

TEST_CASE("bochner_contract anchors") {
  for (int n = 3; n <= 6; ++n) {
    for (int p = 1; p < n; ++p) {
      const auto b = bochner_contract(TwoVectorOperator::identity(n), p);
      const auto dim = b.matrix().rows();
      CHECK(max_entry_deviation(b.matrix(), p * (n - p) * Matrix::Identity(dim, dim)) < 1e-12);
      CHECK(bochner_contract(TwoVectorOperator::zero(n), p).matrix().isZero());
    }
  }
  const auto b = bochner_contract(extrinsic_operator(SymmetricOperator::diagonal(std::vector<double>{-1, 1, 2, 3})), 2);
  Vector expected(6);
  expected << 0, 4, 6, 6, 4, 0;
  CHECK(max_entry_deviation(b.matrix(), Matrix(expected.asDiagonal())) < 1e-12);
  CHECK_THROWS_AS(bochner_contract(TwoVectorOperator::identity(4), 4), DomainError);
  CHECK_THROWS_AS(bochner_contract(TwoVectorOperator::identity(4), 0), DomainError);
}

TEST_CASE("extrinsic_operator anchors") {
  CHECK(max_entry_deviation(extrinsic_operator(SymmetricOperator::identity(4)).matrix(), Matrix::Identity(6, 6)) == 0.0);
  const std::vector<double> k{-1, 1, 2, 3};
  const auto e = extrinsic_operator(SymmetricOperator::diagonal(k));
  Vector expected(6);
  expected << -1, -2, -3, 2, 3, 6;
  CHECK(max_entry_deviation(e.matrix(), Matrix(expected.asDiagonal())) == 0.0);
  CHECK(max_entry_deviation(e.matrix(), pair_diagonal(k)) == 0.0);
  CHECK(extrinsic_operator(SymmetricOperator::zero(4)).matrix().isZero());
}

TEST_CASE("extrinsic_operator is the second compound in a rotated frame") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_symmetric(5, rng);
    const auto ev = symmetric_eigenvalues(extrinsic_operator(a).matrix());
    auto k = a.eigenvalues();
    std::vector<double> products;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) products.push_back(k[i] * k[j]);
    }
    CHECK(spectral_deviation(ev, products) < 1e-10);
  }
}

TEST_CASE("contraction identity: extrinsic contraction equals T_A^[p]") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(3, 6);
    const auto a = random_symmetric(n, rng);
    for (int p = 1; p < n; ++p) {
      const double dev = max_entry_deviation(bochner_contract(extrinsic_operator(a), p).matrix(),
                                             weitzenbock_extension(a, p).matrix());
      REQUIRE(dev < 1e-10);
    }
  }
}

TEST_CASE("compress_ambient anchors") {
  Rng rng(8);
  const auto frame = random_frame(5, 4, rng);
  const auto c = compress_ambient(TwoVectorOperator::identity(5), frame);
  CHECK(c.dimension() == 4);
  CHECK(max_entry_deviation(c.matrix(), Matrix::Identity(6, 6)) < 1e-12);

  Matrix bad = frame;
  bad(0, 0) += 1e-6;
  CHECK_THROWS_AS(compress_ambient(TwoVectorOperator::identity(5), bad), DomainError);
  CHECK_THROWS_AS(compress_ambient(TwoVectorOperator::identity(5), Matrix::Identity(4, 4)), DomainError);
}

TEST_CASE("a very negative normal-direction wedge does not reach the compression") {
  // Tangent frame e_1..e_4 of ℝ⁵; pairs touching e_5 are tangent/normal mixed.
  std::vector<double> diag(10, 1.0);
  const auto pairs = oracle::subsets(5, 2);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    if (pairs[r][1] == 5) diag[r] = -1000.0;
  }
  const Matrix frame = Matrix::Identity(5, 5).leftCols(4);
  const auto c = compress_ambient(TwoVectorOperator::diagonal(5, diag), frame);
  CHECK(max_entry_deviation(c.matrix(), Matrix::Identity(6, 6)) < 1e-12);
}

TEST_CASE("Ky Fan: compression never lowers the average of the m smallest eigenvalues") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5;
    Matrix g(10, 10);
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
    }
    const TwoVectorOperator r(n, g + g.transpose());
    const auto c = compress_ambient(r, random_frame(5, 4, rng));
    for (int m = 1; m <= 6; ++m) CHECK(kyfan_average(c, m) >= kyfan_average(r, m) - 1e-12);
  }
}

TEST_CASE("kyfan_average anchors and monotonicity") {
  for (int m = 1; m <= 6; ++m) CHECK(kyfan_average(TwoVectorOperator::identity(4), m) == doctest::Approx(1.0));
  const std::vector<double> d{-2, 0, 1, 1, 1, 1};
  CHECK(kyfan_average(TwoVectorOperator::diagonal(4, d), 2) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(kyfan_average(TwoVectorOperator::identity(4), 0), DomainError);
  CHECK_THROWS_AS(kyfan_average(TwoVectorOperator::identity(4), 7), DomainError);

  Rng rng(12);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Matrix g(6, 6);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
    }
    const auto ev = symmetric_eigenvalues(g + g.transpose());
    for (int m = 1; m < 6; ++m) {
      if (kyfan_average(ev, m) > kyfan_average(ev, m + 1) + 1e-14) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("gauss_split sums and degenerate cases") {
  Rng rng(77);
  const int n = 4;
  const auto frame = random_frame(n + 1, n, rng);
  const auto a = random_symmetric(n, rng);
  const auto ambient = random_ambient_with_kyfan(n + 1, n - 2, 0.5, rng);
  for (int p = 1; p < n; ++p) {
    const auto s = gauss_split(ambient, frame, a, p);
    CHECK(max_entry_deviation(s.total.matrix(), s.restricted.matrix() + s.extrinsic.matrix()) < 1e-10);
    CHECK(max_entry_deviation(s.extrinsic.matrix(), weitzenbock_extension(a, p).matrix()) < 1e-10);

    const auto zero_a = gauss_split(ambient, frame, SymmetricOperator::zero(n), p);
    CHECK(max_entry_deviation(zero_a.total.matrix(), zero_a.restricted.matrix()) < 1e-14);

    const auto zero_r = gauss_split(TwoVectorOperator::zero(n + 1), frame, a, p);
    CHECK(max_entry_deviation(zero_r.total.matrix(), weitzenbock_extension(a, p).matrix()) < 1e-10);

    // unit-sphere ambient: p(n−p) plus T_A^[p]
    const auto sphere = gauss_split(TwoVectorOperator::identity(n + 1), frame, a, p);
    const auto dim = sphere.total.matrix().rows();
    const Matrix expected = p * (n - p) * Matrix::Identity(dim, dim) + weitzenbock_extension(a, p).matrix();
    CHECK(max_entry_deviation(sphere.total.matrix(), expected) < 1e-10);
  }
  CHECK_THROWS_AS(gauss_split(ambient, frame, SymmetricOperator::zero(3), 1), DomainError);
}

TEST_CASE("gauss_split spectra do not depend on the tangent frame") {
  Rng rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4;
    const auto frame = random_frame(n + 1, n, rng);
    const auto a = random_symmetric(n, rng);
    const auto ambient = random_ambient_with_kyfan(n + 1, n - 1, rng.uniform(-1, 1), rng);
    const Matrix q = random_orthogonal(n, rng);
    // re-frame: F' = F Q, and the shape operator in the new frame is Qᵀ A Q
    const SymmetricOperator a2(Matrix(q.transpose() * a.matrix() * q));
    for (int p = 1; p < n; ++p) {
      const auto s1 = gauss_split(ambient, frame, a, p);
      const auto s2 = gauss_split(ambient, frame * q, a2, p);
      CHECK(spectral_deviation(dense_spectrum(s1.total), dense_spectrum(s2.total)) < 1e-9);
      CHECK(spectral_deviation(dense_spectrum(s1.restricted), dense_spectrum(s2.restricted)) < 1e-9);
    }
  }
}

TEST_CASE("restricted Bochner term is bounded below by the ambient Ky Fan average") {
  Rng rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(3, 6);
    const int p = rng.integer(1, n / 2);
    const double c = rng.uniform(-2.0, 2.0);
    const auto ambient = random_ambient_with_kyfan(n + 1, n - p, c, rng);
    REQUIRE(kyfan_average(ambient, n - p) == doctest::Approx(c).epsilon(1e-12));
    const auto restricted = compress_ambient(ambient, random_frame(n + 1, n, rng));
    for (int ell = 1; ell <= p; ++ell) {
      const double lowest = dense_spectrum(bochner_contract(restricted, ell)).front();
      REQUIRE(lowest >= c * ell * (n - ell) - 1e-9);
    }
  }
}

TEST_CASE("AmbientModel derives c from a full spectrum") {
  std::vector<double> ev(10);
  for (int i = 0; i < 10; ++i) ev[static_cast<std::size_t>(i)] = i - 3.0;
  const auto m = AmbientModel::from_eigenvalues(4, 2, ev);
  CHECK(m.bound() == doctest::Approx((-3.0 - 2.0) / 2.0));
  CHECK(m.eigenvalues().has_value());
  CHECK_FALSE(m.strict_at_point());
  std::vector<double> unsorted = ev;
  std::swap(unsorted[0], unsorted[1]);
  CHECK_THROWS_AS(AmbientModel::from_eigenvalues(4, 2, unsorted), DomainError);
  CHECK_THROWS_AS(AmbientModel::from_eigenvalues(4, 2, std::vector<double>(9, 0.0)), DomainError);
  CHECK_THROWS_AS(AmbientModel::from_bound(4, 0, 1.0), DomainError);
  auto asserted = AmbientModel::from_bound(4, 2, 0.0);
  asserted.assert_strict_at_point();
  CHECK(asserted.strict_at_point());
}
