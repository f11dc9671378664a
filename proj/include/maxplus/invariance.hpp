#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/pteg.hpp"

namespace maxplus {

/**
 * Lift of a PtegSystem onto pairs xbar(k) = [x(k-1); x(k)]:
 *
 *   xbar(k+1) = Abar xbar(k) + Bbar u(k),   xbar(k) in Im H*
 *
 * with Abar = [eps E; eps eps], Bbar = [eps; E], H = [C L; R C].
 */
struct LiftedSystem {
  Matrix abar;
  Matrix bbar;
  Matrix h;
};

LiftedSystem lift_system(const PtegSystem& system);

/// Psi = (R C* L + C)*.
Matrix psi(const PtegSystem& system);

/**
 * S_{k+2} = [ Pi_{k+1}              Pi_{k+1} L (Pi_k + Psi)* ]
 *           [ (Pi_k + Psi)* R Pi_{k+1}      (Pi_k + Psi)*     ]
 *
 * Im S_{k+2} is the k-th iterate of the controlled-invariance map applied
 * to Im H*. May hold +inf entries.
 */
Matrix s_matrix(const PtegSystem& system, std::size_t k);

/// Leading 2n x 2n block of M_[k+2]*. Independent, O((kn)^3) route to s_matrix.
Matrix s_matrix_oracle(const PtegSystem& system, std::size_t k);

struct PhiReport {
  enum class Classification { ConvergedNonEmpty, RealEmptyAtStep, NonConvergentWeakOpen };

  /// S_2, S_3, ... in order; empty when the sequence was not recorded.
  std::vector<Matrix> s_matrices;
  Classification classification = Classification::NonConvergentWeakOpen;
  /**
   * Least k at which Pi_{k+1}, the leading block of S_{k+2}, is terminal:
   * it holds +inf (RealEmptyAtStep) or equals Pi_{k+2} (ConvergedNonEmpty).
   * For NonConvergentWeakOpen, the last step examined.
   */
  std::size_t step = 0;
  /// Least k with S_{k+2} == S_{k+3}; ConvergedNonEmpty only.
  std::optional<std::size_t> stable_from;
  /// Limit matrix S_{step+3}, with Im = K*; ConvergedNonEmpty only.
  std::optional<Matrix> kstar_generator;
  /// Largest Pi index inspected.
  std::size_t probe_bound = 0;
};

std::string_view to_string(PhiReport::Classification c);

/**
 * Iterates S_2, S_3, ... through the closed form until the leading block
 * diverges or stabilizes, or the Pi index passes `probe_bound`
 * (default 10 n^2, never below n^2 + 1). Pass record = false to keep memory flat on long runs.
 */
PhiReport phi_iterate(const PtegSystem& system, std::optional<std::size_t> probe_bound = std::nullopt,
                      bool record = true);

/// Generator S with Im S = K* when K* holds real vectors, nullopt otherwise.
std::optional<Matrix> maximal_invariant(const PtegSystem& system,
                                        std::optional<std::size_t> probe_bound = std::nullopt);

/// xbar in Im generator. Throws NotStarMatrix.
bool invariant_member(const Matrix& generator, const Vector& xbar);

/**
 * Given xbar = [x1; x2] in Im generator, returns [x2; x3] with the least x3
 * keeping the lifted state in Im generator, or nullopt when none does.
 */
std::optional<Vector> controlled_successor(const Matrix& generator, const Vector& xbar);

/// The three-way correspondence between the Pi verdict and the phi classification.
bool verdicts_agree(const ConsistencyVerdict& verdict, const PhiReport& report);

}  // namespace maxplus
