#pragma once

// Deterministic randomness. The generator is std::mt19937_64 (algorithm
// fixed by the C++ standard); uniforms take the top 53 bits of one draw,
// Gaussians come from the Box-Muller transform of two uniforms. A seed
// therefore pins every draw, independent of platform.

#include "qconc/common.hpp"

#include <Eigen/QR>

#include <cstdint>
#include <random>

namespace qconc {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Disjoint per-stream seeds derived from one base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(stream ^ splitmix64(index)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on (0, 1]; never returns 0, so log() below is safe.
  double uniform() { return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Standard complex Gaussian: independent N(0,1) real and imaginary parts.
  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline Matrix random_gaussian_matrix(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) g(r, c) = rng.complex_gaussian();
  }
  return g;
}

// Haar-distributed isometry with orthonormal columns (rows >= cols); the QR
// phase ambiguity is fixed by the sign convention of R's diagonal.
inline Matrix random_isometry(Index rows, Index cols, Rng& rng) {
  require(rows >= cols && cols >= 1, "random_isometry: need rows >= cols >= 1");
  const Matrix g = random_gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const auto rdiag = qr.matrixQR().diagonal();
  for (Index c = 0; c < cols; ++c) {
    const Complex d = rdiag(c);
    const double a = std::abs(d);
    if (a > 0) q.col(c) *= d / a;
  }
  return q;
}

inline Matrix random_unitary(Index n, Rng& rng) { return random_isometry(n, n, rng); }

}  // namespace qconc
