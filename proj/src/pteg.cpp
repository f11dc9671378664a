#include "maxplus/pteg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "maxplus/errors.hpp"
#include "maxplus/star.hpp"

namespace maxplus {

PtegSystem::PtegSystem(Matrix a, Matrix l, Matrix c, Matrix rtilde)
    : a_(std::move(a)), l_(std::move(l)), c_(std::move(c)), rtilde_(std::move(rtilde)) {
  const std::size_t n = a_.rows();
  for (const Matrix* m : {&a_, &l_, &c_, &rtilde_}) {
    if (m->rows() != n || m->cols() != n) {
      throw BlockDimensionMismatch("A, L, C and Rtilde must all be " + std::to_string(n) + "x" +
                                   std::to_string(n));
    }
  }
  require_rmax(a_, "A");
  require_rmax(l_, "L");
  require_rmax(c_, "C");
  require_rmax(rtilde_, "Rtilde");
  r_ = oplus(a_, rtilde_);
}

PiSequence::PiSequence(const PtegSystem& system)
    : l_(system.l()), c_(system.c()), r_(system.r()), current_(kleene_star(c_)) {}

Matrix PiSequence::peek() const {
  return kleene_star(oplus(otimes(otimes(l_, current_), r_), c_));
}

void PiSequence::advance() {
  Matrix next = peek();
  if (!leq(current_, next)) {
    throw std::logic_error("Pi recursion lost monotonicity at k = " + std::to_string(index_ + 1));
  }
  current_ = std::move(next);
  ++index_;
}

std::vector<Matrix> pi_sequence(const PtegSystem& system, std::size_t k_max) {
  std::vector<Matrix> out;
  out.reserve(k_max + 1);
  PiSequence pi(system);
  out.push_back(pi.current());
  while (pi.index() < k_max) {
    pi.advance();
    out.push_back(pi.current());
  }
  return out;
}

std::string_view to_string(ConsistencyVerdict::Kind kind) {
  switch (kind) {
    case ConsistencyVerdict::Kind::Consistent:
      return "Consistent";
    case ConsistencyVerdict::Kind::NotConsistentWeakOpen:
      return "NotConsistentWeakOpen";
    case ConsistencyVerdict::Kind::NotWeaklyConsistent:
      return "NotWeaklyConsistent";
  }
  return "?";
}

std::size_t default_probe_bound(std::size_t n) { return 10 * n * n; }

ConsistencyVerdict check_consistency(const PtegSystem& system, std::optional<std::size_t> weak_probe_bound) {
  const std::size_t n = system.size();
  const std::size_t n2 = n * n;
  const std::size_t bound = std::max(weak_probe_bound.value_or(default_probe_bound(n)), n2 + 1);

  ConsistencyVerdict verdict;
  PiSequence pi(system);
  for (;;) {
    if (pi.current().has_pos_inf()) {
      verdict.kind = ConsistencyVerdict::Kind::NotWeaklyConsistent;
      verdict.first_divergent_k = pi.index();
      return verdict;
    }
    if (pi.index() == bound) break;
    Matrix next = pi.peek();
    if (next == pi.current()) {
      // Stabilized at k <= n^2 (a finite stable Pi never appears later), so Pi_{n^2+1} = Pi_{n^2}.
      verdict.kind = ConsistencyVerdict::Kind::Consistent;
      verdict.pi_fixed = pi.current();
      return verdict;
    }
    pi.advance();
  }
  verdict.kind = ConsistencyVerdict::Kind::NotConsistentWeakOpen;
  verdict.verified_up_to = bound;
  return verdict;
}

namespace {

Vector build_seed(std::size_t n, std::size_t horizon, const std::optional<Vector>& seed) {
  Vector stacked(horizon * n);
  if (!seed) {
    std::fill(stacked.begin(), stacked.end(), Scalar::unit());
    return stacked;
  }
  if (!is_real(*seed)) throw InvalidInput("trajectory seed must be real");
  if (seed->size() == n) {
    for (std::size_t b = 0; b < horizon; ++b) std::copy(seed->begin(), seed->end(), stacked.begin() + b * n);
  } else if (seed->size() == 2 * n || seed->size() == horizon * n) {
    std::copy(seed->begin(), seed->end(), stacked.begin());
  } else {
    throw DimensionMismatch("seed of length " + std::to_string(seed->size()) + " for n = " + std::to_string(n) +
                            ", K = " + std::to_string(horizon));
  }
  return stacked;
}

}  // namespace

Trajectory synthesize_trajectory(const PtegSystem& system, std::size_t horizon, const std::optional<Vector>& seed) {
  if (horizon < 2) throw std::invalid_argument("trajectory horizon must be at least 2");
  const std::size_t n = system.size();
  const Vector stacked = build_seed(n, horizon, seed);
  const Vector x = otimes(kleene_star(build_block_matrix(system.block_spec(), horizon)), stacked);

  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    const std::string where = "x_" + std::to_string(idx % n + 1) + "(" + std::to_string(idx / n + 1) + ")";
    if (x[idx].is_pos_inf()) {
      throw InfeasibleHorizon(InfeasibleHorizon::Reason::Divergent, horizon,
                              "no trajectory of length " + std::to_string(horizon) +
                                  ": positive-weight circuit drives " + where + " to +inf");
    }
    if (x[idx].is_neg_inf()) {
      throw InfeasibleHorizon(InfeasibleHorizon::Reason::Unreached, horizon,
                              "seed does not reach " + where + " (value -inf); choose a different seed");
    }
  }

  Trajectory t;
  t.horizon = horizon;
  for (std::size_t k = 0; k < horizon; ++k) {
    t.states.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(k * n),
                          x.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
  }
  t.inputs.assign(t.states.begin() + 1, t.states.end());
  return t;
}

bool validate_trajectory(const PtegSystem& system, const Trajectory& t) {
  const std::size_t n = system.size();
  if (t.states.size() != t.horizon || t.horizon == 0) return false;
  for (const Vector& x : t.states) {
    if (x.size() != n || !is_real(x)) return false;
  }
  for (std::size_t k = 0; k < t.horizon; ++k) {
    if (!leq(otimes(system.c(), t.states[k]), t.states[k])) return false;
  }
  for (std::size_t k = 0; k + 1 < t.horizon; ++k) {
    if (!leq(otimes(system.l(), t.states[k + 1]), t.states[k])) return false;
    if (!leq(otimes(system.r(), t.states[k]), t.states[k + 1])) return false;
  }
  if (!t.inputs.empty()) {
    if (t.inputs.size() != t.horizon - 1) return false;
    for (std::size_t k = 0; k + 1 < t.horizon; ++k) {
      if (t.inputs[k] != t.states[k + 1]) return false;
      if (!leq(otimes(system.a(), t.states[k]), t.inputs[k])) return false;
    }
  }
  return true;
}

}  // namespace maxplus
