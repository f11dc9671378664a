#include <doctest.h>

#include <random>

#include "maxplus/errors.hpp"
#include "maxplus/precedence.hpp"
#include "maxplus/pteg.hpp"
#include "maxplus/star.hpp"
#include "support.hpp"

using namespace maxplus;
using namespace maxplus::testing;

namespace {

const Matrix kRailwayPiFixed{{0, eps, eps, eps}, {eps, 0, eps, eps}, {eps, eps, 0, eps}, {0, 3, 0, 0}};

}  // namespace

TEST_CASE("system construction") {
  const PtegSystem drift = drift_system();
  CHECK(drift.r() == Matrix{{2, eps}, {eps, eps}});
  const PtegSystem mixed(Matrix{{1, eps}, {eps, eps}}, Matrix(2, 2), Matrix(2, 2), Matrix{{0, 3}, {eps, eps}});
  CHECK(mixed.r() == Matrix{{1, 3}, {eps, eps}});
  CHECK_THROWS_AS(PtegSystem(Matrix(2, 2), Matrix(3, 3), Matrix(2, 2), Matrix(2, 2)), BlockDimensionMismatch);
  CHECK_THROWS_AS(PtegSystem(Matrix{{top}}, Matrix(1, 1), Matrix(1, 1), Matrix(1, 1)), InvalidInput);
}

TEST_CASE("Pi sequence of the drift system") {
  const auto pis = pi_sequence(drift_system(), 5);
  REQUIRE(pis.size() == 6);
  CHECK(pis[0] == Matrix{{0, eps}, {0, 0}});
  CHECK(pis[4] == Matrix{{0, eps}, {4, 0}});
  CHECK(pis[5] == Matrix{{0, eps}, {5, 0}});
}

TEST_CASE("Pi sequence of the empty system is E") {
  const PtegSystem empty(Matrix(3, 3), Matrix(3, 3), Matrix(3, 3), Matrix(3, 3));
  for (const Matrix& pi : pi_sequence(empty, 6)) CHECK(pi == Matrix::identity(3));
}

TEST_CASE("Pi sequence of the railway with ell = -14") {
  const auto pis = pi_sequence(railway(-14), 17);
  CHECK(pis[16] == kRailwayPiFixed);
  CHECK(pis[17] == kRailwayPiFixed);
}

TEST_CASE("consistency verdicts of the drift and railway systems") {
  const ConsistencyVerdict drift = check_consistency(drift_system());
  CHECK(drift.kind == ConsistencyVerdict::Kind::NotConsistentWeakOpen);
  CHECK(drift.verified_up_to == std::optional<std::size_t>(40));
  CHECK_FALSE(drift.pi_fixed.has_value());
  CHECK_FALSE(drift.first_divergent_k.has_value());

  const ConsistencyVerdict rail14 = check_consistency(railway(-14));
  CHECK(rail14.kind == ConsistencyVerdict::Kind::Consistent);
  REQUIRE(rail14.pi_fixed.has_value());
  CHECK(*rail14.pi_fixed == kRailwayPiFixed);
  CHECK(is_star_matrix(*rail14.pi_fixed));
  CHECK_FALSE(rail14.verified_up_to.has_value());

  const ConsistencyVerdict rail13 = check_consistency(railway(-13));
  CHECK(rail13.kind == ConsistencyVerdict::Kind::NotWeaklyConsistent);
  CHECK(rail13.first_divergent_k == std::optional<std::size_t>(3));
  CHECK_FALSE(rail13.pi_fixed.has_value());
}

TEST_CASE("probe bound") {
  CHECK(check_consistency(drift_system(), 100).verified_up_to == std::optional<std::size_t>(100));
  // Never below n^2 + 1.
  CHECK(check_consistency(drift_system(), 1).verified_up_to == std::optional<std::size_t>(5));
  // Divergence past the default bound shows up once the bound is raised.
  CHECK(check_consistency(railway(q("-13.9"))).first_divergent_k == std::optional<std::size_t>(21));
  const PtegSystem slow = railway(q("-13.999"));
  CHECK(check_consistency(slow).kind == ConsistencyVerdict::Kind::NotConsistentWeakOpen);
  const ConsistencyVerdict deep = check_consistency(slow, 2100);
  CHECK(deep.kind == ConsistencyVerdict::Kind::NotWeaklyConsistent);
  CHECK(deep.first_divergent_k == std::optional<std::size_t>(2001));
}

TEST_CASE("Pi recursion invariants on random systems") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const PtegSystem sys = random_system(rng, n, 0.6);
    const auto pis = pi_sequence(sys, 8);
    for (std::size_t k = 0; k + 1 < pis.size(); ++k) {
      CHECK(leq(pis[k], pis[k + 1]));
      if (pis[k] == pis[k + 1] && k + 2 < pis.size()) CHECK(pis[k + 2] == pis[k]);
    }
    for (const Matrix& pi : pis) {
      if (pi.is_rmax()) CHECK(is_star_matrix(pi));
    }
    // Pi_k is the leading block of the star of M_[k+1].
    for (std::size_t k = 0; k <= 5; ++k) {
      CHECK(pis[k] == star_oracle(build_block_matrix(sys.block_spec(), k + 1)).block(0, 0, n, n));
    }
  }
}

TEST_CASE("verdicts agree with the per-horizon graph check") {
  std::mt19937 rng(1717);
  int consistent = 0;
  int divergent = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const PtegSystem sys = random_system(rng, n, 0.65);
    const ConsistencyVerdict v = check_consistency(sys);
    const BlockMatrixSpec spec = sys.block_spec();
    if (v.kind == ConsistencyVerdict::Kind::NotWeaklyConsistent) {
      ++divergent;
      // Pi_d diverges exactly when M_[d+1] first carries a positive circuit.
      const std::size_t d = *v.first_divergent_k;
      CHECK_FALSE(finite_weak_feasibility(spec, d + 1));
      if (d > 0) CHECK(finite_weak_feasibility(spec, d));
    } else if (v.kind == ConsistencyVerdict::Kind::Consistent) {
      ++consistent;
      for (std::size_t k = 1; k <= 10; ++k) CHECK(finite_weak_feasibility(spec, k));
    }
  }
  CHECK(consistent > 10);
  CHECK(divergent > 10);
}

TEST_CASE("trajectory synthesis from the zero seed") {
  const PtegSystem forward(Matrix{{2, eps}, {eps, eps}}, Matrix(2, 2), Matrix(2, 2), Matrix(2, 2));
  const Trajectory t = synthesize_trajectory(forward, 3);
  // Forward recursion x(k+1) = R x(k) + 0 from x(1) = 0.
  CHECK(t.states == std::vector<Vector>{{0, 0}, {2, 0}, {4, 0}});
  CHECK(t.inputs == std::vector<Vector>{{2, 0}, {4, 0}});
  CHECK(validate_trajectory(forward, t));

  const PtegSystem rail14 = railway(-14);
  const Trajectory r = synthesize_trajectory(rail14, 3);
  CHECK(r.states.size() == 3);
  for (const Vector& x : r.states) CHECK(is_real(x));
  CHECK(validate_trajectory(rail14, r));

  const PtegSystem empty(Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2));
  CHECK(synthesize_trajectory(empty, 2).states == std::vector<Vector>{{0, 0}, {0, 0}});
}

TEST_CASE("trajectory synthesis failures") {
  try {
    synthesize_trajectory(railway(-13), 8);
    FAIL("expected InfeasibleHorizon");
  } catch (const InfeasibleHorizon& e) {
    CHECK(e.reason() == InfeasibleHorizon::Reason::Divergent);
    CHECK(e.horizon() == 8);
  }

  // Seed only in the first two blocks leaves x(3) unreached when nothing propagates.
  const PtegSystem empty(Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2));
  try {
    synthesize_trajectory(empty, 3, Vector{0, 0, 0, 0});
    FAIL("expected InfeasibleHorizon");
  } catch (const InfeasibleHorizon& e) {
    CHECK(e.reason() == InfeasibleHorizon::Reason::Unreached);
  }

  CHECK_THROWS_AS(synthesize_trajectory(empty, 1), std::invalid_argument);
  CHECK_THROWS_AS(synthesize_trajectory(empty, 3, Vector{0, 0, 0}), DimensionMismatch);
  CHECK_THROWS_AS(synthesize_trajectory(empty, 3, Vector{0, eps}), InvalidInput);
}

TEST_CASE("custom seeds") {
  const PtegSystem forward(Matrix{{2, eps}, {eps, eps}}, Matrix(2, 2), Matrix(2, 2), Matrix(2, 2));
  const Trajectory t = synthesize_trajectory(forward, 3, Vector{1, 5});
  CHECK(t.states == std::vector<Vector>{{1, 5}, {3, 5}, {5, 5}});
  const Trajectory full = synthesize_trajectory(forward, 2, Vector{0, 0, 7, 1});
  CHECK(full.states == std::vector<Vector>{{0, 0}, {7, 1}});
}

TEST_CASE("trajectory validation") {
  const PtegSystem drift = drift_system();
  Trajectory bad;
  bad.horizon = 2;
  bad.states = {{0, 0}, {1, 1}};
  CHECK_FALSE(validate_trajectory(drift, bad));

  const PtegSystem empty(Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2));
  Trajectory any;
  any.horizon = 3;
  any.states = {{5, -3}, {q("1/3"), 0}, {-100, 2}};
  CHECK(validate_trajectory(empty, any));

  any.inputs = {{0, 0}, {0, 0}};
  CHECK_FALSE(validate_trajectory(empty, any));
  any.states[1][0] = eps;
  any.inputs.clear();
  CHECK_FALSE(validate_trajectory(empty, any));
}

TEST_CASE("synthesized trajectories always validate") {
  std::mt19937 rng(555);
  int successes = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const PtegSystem sys = random_system(rng, n, 0.65);
    for (std::size_t k = 2; k <= 6; ++k) {
      try {
        const Trajectory t = synthesize_trajectory(sys, k);
        CHECK(validate_trajectory(sys, t));
        ++successes;
      } catch (const InfeasibleHorizon& e) {
        CHECK_FALSE(finite_weak_feasibility(sys.block_spec(), k));
      }
    }
  }
  CHECK(successes > 100);
}
