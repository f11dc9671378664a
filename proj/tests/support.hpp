#pragma once

// Shared fixtures and brute-force oracles for the test suites. Nothing in
// here calls kleene_star or the Pi / S machinery, so the oracles stay
// independent of the code they check.

#include <cstddef>
#include <random>
#include <string>

#include "maxplus/matrix.hpp"
#include "maxplus/pteg.hpp"

namespace maxplus::testing {

inline const Scalar eps = Scalar::neg_inf();
inline const Scalar top = Scalar::pos_inf();

inline Scalar q(const std::string& text) { return Scalar::parse(text); }

/// Two events, weakly consistent but not consistent.
inline PtegSystem drift_system() {
  return PtegSystem(Matrix{{2, eps}, {eps, eps}}, Matrix{{eps, eps}, {eps, -1}}, Matrix{{eps, eps}, {0, eps}},
                    Matrix(2, 2));
}

inline Matrix railway_a() {
  return Matrix{{0, 17, eps, eps}, {eps, 0, 11, 9}, {14, eps, 11, 9}, {14, eps, 11, 0}};
}

/// Transportation network with the single window x4(k) >= ell + x4(k+1).
inline PtegSystem railway(const Scalar& ell) {
  Matrix l(4, 4);
  l(3, 3) = ell;
  return PtegSystem(railway_a(), l, Matrix(4, 4), Matrix(4, 4));
}

/// Two-node circuit with weights 2 and -1 plus a -3 self-loop.
inline Matrix positive_loop_matrix() { return Matrix{{-3, -1}, {2, eps}}; }

/// Integer entries in [lo, hi], each -inf with probability `eps_rate`.
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5,
                            double eps_rate = 0.5) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::bernoulli_distribution blank(eps_rate);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!blank(rng)) m(i, j) = value(rng);
    }
  }
  return m;
}

inline PtegSystem random_system(std::mt19937& rng, std::size_t n, double eps_rate = 0.5) {
  return PtegSystem(random_matrix(rng, n, n, -5, 5, eps_rate), random_matrix(rng, n, n, -5, 5, eps_rate),
                    random_matrix(rng, n, n, -5, 5, eps_rate), random_matrix(rng, n, n, -5, 5, eps_rate));
}

/// E + A + ... + A^m by repeated products.
inline Matrix power_sum(const Matrix& a, std::size_t m) {
  Matrix sum = Matrix::identity(a.rows());
  Matrix power = Matrix::identity(a.rows());
  for (std::size_t k = 1; k <= m; ++k) {
    power = otimes(power, a);
    sum = oplus(sum, power);
  }
  return sum;
}

/// Some closed walk of length <= n through a node has positive weight.
inline bool positive_walk_oracle(const Matrix& a) {
  Matrix power = Matrix::identity(a.rows());
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    power = otimes(power, a);
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (Scalar::unit() < power(k, k)) return true;
    }
  }
  return false;
}

/**
 * Star by path enumeration: the power sum up to length n - 1 when no
 * positive walk exists, otherwise the same sum with every pair routed
 * through a node on a positive closed walk set to +inf.
 */
inline Matrix star_oracle(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix sum = power_sum(a, n == 0 ? 0 : n - 1);
  Matrix power = Matrix::identity(n);
  std::vector<bool> positive(n, false);
  for (std::size_t m = 1; m <= n; ++m) {
    power = otimes(power, a);
    for (std::size_t k = 0; k < n; ++k) positive[k] = positive[k] || Scalar::unit() < power(k, k);
  }
  Matrix out = sum;
  for (std::size_t k = 0; k < n; ++k) {
    if (!positive[k]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!sum(i, k).is_neg_inf() && !sum(k, j).is_neg_inf()) out(i, j) = top;
      }
    }
  }
  return out;
}

}  // namespace maxplus::testing
