#pragma once

#include <cstdint>

#include "qconvex/curvature_bochner.hpp"
#include "qconvex/exterior_operators.hpp"
#include "qconvex/principal_spectrum.hpp"

namespace qconvex {

/// Small deterministic generator: splitmix64-seeded xoshiro256**. Output is
/// identical across platforms, unlike the <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Stream `index` of a master seed; used to shard sweeps reproducibly.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  std::uint64_t s_[4];
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Symmetric matrix with entries uniform in [−scale, scale].
SymmetricOperator random_symmetric(int n, Rng& rng, double scale = 1.0);

/// Orthogonal matrix from the QR factorization of a random matrix.
Matrix random_orthogonal(int n, Rng& rng);

/// N×m matrix with orthonormal columns.
Matrix random_frame(int big, int m, Rng& rng);

/// Random spectrum whose q smallest values sum to >= 0. With probability
/// `boundary_probability` the q-margin is shifted to exactly zero.
PrincipalSpectrum random_qnonnegative_spectrum(int n, int q, Rng& rng, double boundary_probability = 0.2);

/// Random symmetric operator on Λ²ℝᴺ (N = big) whose m smallest eigenvalues
/// average exactly `c`, in a random orthonormal eigenbasis.
TwoVectorOperator random_ambient_with_kyfan(int big, int m, double c, Rng& rng);

/// Rotates A by a random orthogonal Q: Q A Qᵀ.
SymmetricOperator rotate(const SymmetricOperator& a, const Matrix& q);

}  // namespace qconvex
