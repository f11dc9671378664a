#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/precedence.hpp"

namespace maxplus {

/**
 * Fully actuated system x(k+1) = A x(k) + u(k) under the time-window constraints
 *
 *   x(k)   >= L x(k+1)
 *   x(k)   >= C x(k)
 *   x(k+1) >= Rtilde x(k)
 *
 * Choosing u(k) = x(k+1) folds the dynamics into the constraints with
 * R = A + Rtilde.
 */
class PtegSystem {
 public:
  /// Throws BlockDimensionMismatch or InvalidInput (+inf entries).
  PtegSystem(Matrix a, Matrix l, Matrix c, Matrix rtilde);

  std::size_t size() const noexcept { return a_.rows(); }
  const Matrix& a() const noexcept { return a_; }
  const Matrix& l() const noexcept { return l_; }
  const Matrix& c() const noexcept { return c_; }
  const Matrix& rtilde() const noexcept { return rtilde_; }
  const Matrix& r() const noexcept { return r_; }

  BlockMatrixSpec block_spec() const { return BlockMatrixSpec(c_, l_, r_); }

 private:
  Matrix a_;
  Matrix l_;
  Matrix c_;
  Matrix rtilde_;
  Matrix r_;
};

/**
 * Lazy walk over Pi_0 = C*, Pi_{k+1} = (L Pi_k R + C)*.
 *
 * Holds only the current matrix. Every step checks Pi_{k+1} >= Pi_k and
 * throws std::logic_error if monotonicity is ever broken.
 */
class PiSequence {
 public:
  explicit PiSequence(const PtegSystem& system);

  std::size_t index() const noexcept { return index_; }
  const Matrix& current() const noexcept { return current_; }
  /// Computes the next matrix without advancing.
  Matrix peek() const;
  void advance();

 private:
  Matrix l_;
  Matrix c_;
  Matrix r_;
  std::size_t index_ = 0;
  Matrix current_;
};

/// [Pi_0, ..., Pi_kmax].
std::vector<Matrix> pi_sequence(const PtegSystem& system, std::size_t k_max);

struct ConsistencyVerdict {
  enum class Kind { Consistent, NotConsistentWeakOpen, NotWeaklyConsistent };

  Kind kind = Kind::NotConsistentWeakOpen;
  /// Pi_{n^2}, set when Consistent.
  std::optional<Matrix> pi_fixed;
  /// Least k with +inf in Pi_k, set when NotWeaklyConsistent.
  std::optional<std::size_t> first_divergent_k;
  /// Largest k probed with every Pi finite, set when NotConsistentWeakOpen.
  std::optional<std::size_t> verified_up_to;
};

std::string_view to_string(ConsistencyVerdict::Kind kind);

/// 10 n^2, the probe bound used when none is given.
std::size_t default_probe_bound(std::size_t n);

/**
 * Decides consistency through the Pi recursion.
 *
 * Consistent when Pi_{n^2+1} == Pi_{n^2} is finite; not weakly consistent
 * as soon as some Pi_k holds +inf. Otherwise the recursion keeps going up
 * to `weak_probe_bound` (default 10 n^2, never below n^2 + 1) and, if no
 * divergence shows up, the result is the bounded NotConsistentWeakOpen.
 */
ConsistencyVerdict check_consistency(const PtegSystem& system,
                                     std::optional<std::size_t> weak_probe_bound = std::nullopt);

struct Trajectory {
  std::size_t horizon = 0;
  std::vector<Vector> states;  ///< x(1..K)
  std::vector<Vector> inputs;  ///< u(1..K-1), u(k) = x(k+1)
};

/**
 * Finite trajectory x_[K] = M_[K]* u~.
 *
 * `seed` sets u~: length n is repeated in every block, length 2n fills
 * the first two blocks (the rest -inf), length K n is used verbatim. The
 * default is the zero vector in every block, which gives the least
 * trajectory dominating 0.
 *
 * Throws InfeasibleHorizon when a component of x_[K] is not real,
 * std::invalid_argument for K < 2, DimensionMismatch for a bad seed.
 */
Trajectory synthesize_trajectory(const PtegSystem& system, std::size_t horizon,
                                 const std::optional<Vector>& seed = std::nullopt);

/// Exact check of all three constraint families, plus u(k) = x(k+1) when inputs are present.
bool validate_trajectory(const PtegSystem& system, const Trajectory& trajectory);

}  // namespace maxplus
