// random.hpp
// Seed-deterministic sampling: per-stream seed splitting, complex Ginibre
// matrices, Haar unitaries, and uniform simplex weights. No global RNG state.

#pragma once

#include "texlab/matker.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace texlab {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Counter-based child seed: trial `index` of stream `seed` always maps to the
/// same value regardless of evaluation order.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Standard complex Gaussian entry: real and imaginary parts N(0, 1/2).
inline Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

inline ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = complex_gaussian(rng);
  return g;
}

/// rows x cols matrix with orthonormal columns (cols <= rows), from the QR of
/// a Ginibre matrix with R's diagonal phases absorbed into Q.
inline ComplexMatrix random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  const ComplexMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < cols; ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    const Complex phase = mag > 0.0 ? rkk / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

inline ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) { return random_isometry(n, n, rng); }

/// Uniform point on the (n-1)-simplex via normalized exponentials.
inline std::vector<double> simplex_weights(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = e(rng);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace texlab
