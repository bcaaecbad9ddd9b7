#include "qconvex/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qconvex/error.hpp"

namespace qconvex {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed;
  const std::uint64_t a = splitmix64(x);
  x = a ^ (index * 0xD1B54A32D192ED03ULL);
  return splitmix64(x);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) s = splitmix64(x);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) { return Rng(derive_seed(seed, index)); }

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int Rng::integer(int lo, int hi) {
  if (hi < lo) throw DomainError("Rng::integer: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

SymmetricOperator random_symmetric(int n, Rng& rng, double scale) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = rng.uniform(-scale, scale);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return SymmetricOperator(std::move(m));
}

Matrix random_orthogonal(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(n, n);
}

Matrix random_frame(int big, int m, Rng& rng) {
  if (m > big) throw DomainError("random_frame: more vectors than dimensions");
  return random_orthogonal(big, rng).leftCols(m);
}

PrincipalSpectrum random_qnonnegative_spectrum(int n, int q, Rng& rng, double boundary_probability) {
  std::vector<double> k(static_cast<std::size_t>(n));
  for (auto& v : k) v = rng.uniform(-3.0, 3.0);
  std::sort(k.begin(), k.end());
  const double margin = std::accumulate(k.begin(), k.begin() + q, 0.0);
  double shift = 0.0;
  if (rng.uniform() < boundary_probability) {
    shift = -margin / q;
  } else if (margin < 0.0) {
    shift = -margin / q + rng.uniform(0.0, 1.0);
  }
  for (auto& v : k) v += shift;
  return PrincipalSpectrum(std::move(k));
}

TwoVectorOperator random_ambient_with_kyfan(int big, int m, double c, Rng& rng) {
  const auto dim = static_cast<int>(binomial(big, 2));
  if (m < 1 || m > dim) throw DomainError("random_ambient_with_kyfan: m out of range");
  std::vector<double> ev(static_cast<std::size_t>(dim));
  for (auto& v : ev) v = rng.uniform(-3.0, 3.0);
  std::sort(ev.begin(), ev.end());
  const double avg = std::accumulate(ev.begin(), ev.begin() + m, 0.0) / m;
  for (auto& v : ev) v += c - avg;
  const Matrix q = random_orthogonal(dim, rng);
  Vector d = Eigen::Map<const Vector>(ev.data(), dim);
  Matrix r = q * d.asDiagonal() * q.transpose();
  r = 0.5 * (r + r.transpose()).eval();
  return TwoVectorOperator(big, std::move(r));
}

SymmetricOperator rotate(const SymmetricOperator& a, const Matrix& q) {
  Matrix m = q * a.matrix() * q.transpose();
  m = 0.5 * (m + m.transpose()).eval();
  return SymmetricOperator(std::move(m));
}

}  // namespace qconvex
