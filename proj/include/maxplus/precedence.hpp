#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// The precedence inequality x >= A x; A_ij is the weight of arc j -> i.
class PrecedenceSystem {
 public:
  /// Throws NotSquare or InvalidInput (+inf entry).
  explicit PrecedenceSystem(Matrix a);

  const Matrix& matrix() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.rows(); }

 private:
  Matrix a_;
};

/**
 * Real solution of x >= A x, or nullopt when A* diverges.
 *
 * The returned witness is A* applied to the zero vector (row maxima of A*),
 * the least solution dominating 0.
 */
std::optional<Vector> solve_precedence(const PrecedenceSystem& system);

/// The three blocks of the tridiagonal matrix M_[K].
class BlockMatrixSpec {
 public:
  /// Throws BlockDimensionMismatch unless C, L, R are n x n with a common n.
  BlockMatrixSpec(Matrix c, Matrix l, Matrix r);

  const Matrix& c() const noexcept { return c_; }
  const Matrix& l() const noexcept { return l_; }
  const Matrix& r() const noexcept { return r_; }
  std::size_t size() const noexcept { return c_.rows(); }

 private:
  Matrix c_;
  Matrix l_;
  Matrix r_;
};

/// M_[K]: C on the block diagonal, L above it, R below it. Throws std::invalid_argument for K = 0.
Matrix build_block_matrix(const BlockMatrixSpec& spec, std::size_t horizon);

/// No positive-weight circuit in the precedence graph of M_[K].
bool finite_weak_feasibility(const BlockMatrixSpec& spec, std::size_t horizon);

/// Graphviz digraph of M_[K]. Nodes are "x_i(k)", listed block by block.
std::string export_dot(const BlockMatrixSpec& spec, std::size_t horizon);

}  // namespace maxplus
