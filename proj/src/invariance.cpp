#include "maxplus/invariance.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxplus/errors.hpp"
#include "maxplus/precedence.hpp"
#include "maxplus/star.hpp"

namespace maxplus {

namespace {

Matrix assemble_s(const Matrix& pi_next, const Matrix& pi_k, const Matrix& psi_star, const Matrix& l,
                  const Matrix& r) {
  const std::size_t n = pi_k.rows();
  const Matrix lower = kleene_star(oplus(pi_k, psi_star));
  Matrix s(2 * n, 2 * n);
  s.set_block(0, 0, pi_next);
  s.set_block(0, n, otimes(otimes(pi_next, l), lower));
  s.set_block(n, 0, otimes(otimes(lower, r), pi_next));
  s.set_block(n, n, lower);
  return s;
}

}  // namespace

LiftedSystem lift_system(const PtegSystem& system) {
  const std::size_t n = system.size();
  LiftedSystem lifted{Matrix(2 * n, 2 * n), Matrix(2 * n, n), Matrix(2 * n, 2 * n)};
  lifted.abar.set_block(0, n, Matrix::identity(n));
  lifted.bbar.set_block(n, 0, Matrix::identity(n));
  lifted.h = build_block_matrix(system.block_spec(), 2);
  return lifted;
}

Matrix psi(const PtegSystem& system) {
  const Matrix rcl = otimes(otimes(system.r(), kleene_star(system.c())), system.l());
  return kleene_star(oplus(rcl, system.c()));
}

Matrix s_matrix(const PtegSystem& system, std::size_t k) {
  PiSequence pi(system);
  while (pi.index() < k) pi.advance();
  return assemble_s(pi.peek(), pi.current(), psi(system), system.l(), system.r());
}

Matrix s_matrix_oracle(const PtegSystem& system, std::size_t k) {
  const std::size_t n = system.size();
  return kleene_star(build_block_matrix(system.block_spec(), k + 2)).block(0, 0, 2 * n, 2 * n);
}

std::string_view to_string(PhiReport::Classification c) {
  switch (c) {
    case PhiReport::Classification::ConvergedNonEmpty:
      return "ConvergedNonEmpty";
    case PhiReport::Classification::RealEmptyAtStep:
      return "RealEmptyAtStep";
    case PhiReport::Classification::NonConvergentWeakOpen:
      return "NonConvergentWeakOpen";
  }
  return "?";
}

PhiReport phi_iterate(const PtegSystem& system, std::optional<std::size_t> probe_bound, bool record) {
  const Matrix psi_star = psi(system);
  PhiReport report;
  const std::size_t n = system.size();
  report.probe_bound = std::max(probe_bound.value_or(default_probe_bound(n)), n * n + 1);

  // Iteration k builds S_{k+2} from Pi_{k+1} (next) and Pi_k (current).
  PiSequence pi(system);
  std::optional<Matrix> previous_s;
  for (std::size_t k = 0;; ++k) {
    if (k + 1 > report.probe_bound) {
      report.classification = PhiReport::Classification::NonConvergentWeakOpen;
      report.step = k == 0 ? 0 : k - 1;
      return report;
    }
    Matrix next = pi.peek();
    Matrix s = assemble_s(next, pi.current(), psi_star, system.l(), system.r());
    if (record) report.s_matrices.push_back(s);

    if (next.has_pos_inf()) {
      if (!s.has_pos_inf()) throw std::logic_error("diverging Pi block inside a finite S");
      report.classification = PhiReport::Classification::RealEmptyAtStep;
      report.step = k;
      return report;
    }
    if (!s.has_pos_inf() && !is_star_matrix(s)) {
      throw std::logic_error("S_" + std::to_string(k + 2) + " is not a star matrix");
    }
    if (previous_s && !report.stable_from && *previous_s == s) report.stable_from = k - 1;

    if (next == pi.current()) {
      // Pi_{k+1} == Pi_k: the leading block settled at step k - 1, and S_{k+2} is the limit.
      report.classification = PhiReport::Classification::ConvergedNonEmpty;
      report.step = k == 0 ? 0 : k - 1;
      if (!report.stable_from) report.stable_from = k;
      report.kstar_generator = std::move(s);
      return report;
    }
    previous_s = std::move(s);
    pi.advance();
  }
}

std::optional<Matrix> maximal_invariant(const PtegSystem& system, std::optional<std::size_t> probe_bound) {
  PhiReport report = phi_iterate(system, probe_bound, false);
  if (report.classification != PhiReport::Classification::ConvergedNonEmpty) return std::nullopt;
  return std::move(report.kstar_generator);
}

bool invariant_member(const Matrix& generator, const Vector& xbar) { return image_member(generator, xbar); }

std::optional<Vector> controlled_successor(const Matrix& generator, const Vector& xbar) {
  if (!invariant_member(generator, xbar)) return std::nullopt;
  const std::size_t n = generator.rows() / 2;
  // Least x3 with [x2; x3] = S [x2; x3] is the lower half of S [x2; eps].
  Vector probe(2 * n);
  std::copy(xbar.begin() + static_cast<std::ptrdiff_t>(n), xbar.end(), probe.begin());
  const Vector image = otimes(generator, probe);

  Vector successor(2 * n);
  std::copy(xbar.begin() + static_cast<std::ptrdiff_t>(n), xbar.end(), successor.begin());
  std::copy(image.begin() + static_cast<std::ptrdiff_t>(n), image.end(),
            successor.begin() + static_cast<std::ptrdiff_t>(n));
  if (!image_member(generator, successor)) return std::nullopt;
  return successor;
}

bool verdicts_agree(const ConsistencyVerdict& verdict, const PhiReport& report) {
  using Kind = ConsistencyVerdict::Kind;
  using Class = PhiReport::Classification;
  switch (report.classification) {
    case Class::ConvergedNonEmpty:
      return verdict.kind == Kind::Consistent;
    case Class::RealEmptyAtStep:
      return verdict.kind == Kind::NotWeaklyConsistent;
    case Class::NonConvergentWeakOpen:
      return verdict.kind == Kind::NotConsistentWeakOpen;
  }
  return false;
}

}  // namespace maxplus
