// Copyright 2026 The gte Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "gte/finite_game.hpp"
#include "gte/game_ops.hpp"
#include "gte/scenarios.hpp"

using namespace gte;

namespace {

FiniteGame matching_pennies() {
  return FiniteGame({2, 2}, {1, -1, -1, 1, -1, 1, 1, -1});
}

}  // namespace

TEST_CASE("dense payoff storage is player-major with lexicographic profiles") {
  FiniteGame g = sensor_dilemma(0.2);
  CHECK(g.num_players() == 2);
  CHECK(g.is_dense());
  CHECK(g.profile_count() == 4);
  CHECK(g.payoff(0, {0, 0}) == doctest::Approx(0.0));
  CHECK(g.payoff(0, {0, 1}) == doctest::Approx(1.0));
  CHECK(g.payoff(0, {1, 0}) == doctest::Approx(-0.2));
  CHECK(g.payoff(0, {1, 1}) == doctest::Approx(0.8));
  // Player 1 is the mirror image.
  CHECK(g.payoff(1, {0, 1}) == doctest::Approx(-0.2));
  CHECK(g.payoff(1, {1, 0}) == doctest::Approx(1.0));
}

TEST_CASE("flat indexing round-trips with player 0 most significant") {
  FiniteGame g({2, 3, 2}, std::vector<double>(3 * 12, 0.0));
  CHECK(g.flat_index({0, 0, 0}) == 0);
  CHECK(g.flat_index({0, 0, 1}) == 1);
  CHECK(g.flat_index({0, 1, 0}) == 2);
  CHECK(g.flat_index({1, 0, 0}) == 6);
  for (std::uint64_t f = 0; f < 12; ++f) {
    CHECK(g.flat_index(g.unflatten(f)) == f);
  }
}

TEST_CASE("constructor rejects malformed payoff tensors") {
  CHECK_THROWS_AS(FiniteGame({2, 2}, {1, 2, 3}), ValidationError);
  CHECK_THROWS_AS(FiniteGame({2, 0}, {}), ValidationError);
  CHECK_THROWS_AS(FiniteGame({}, {}), ValidationError);
}

TEST_CASE("evaluator-backed games reject dense-only operations") {
  std::vector<int> counts(30, 2);
  FiniteGame g = FiniteGame::from_evaluator(
      counts, [](int, const PureProfile&) { return 0.0; });
  CHECK_FALSE(g.is_dense());
  CHECK(g.payoff(0, PureProfile(30, 1)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(g.profile_count(), CapacityError);
  CHECK_THROWS_AS(social_optimum(g), CapacityError);
}

TEST_CASE("mixed profiles validate simplex membership") {
  MixedProfile ok({{0.25, 0.75}, {1.0, 0.0}});
  CHECK_NOTHROW(ok.validate());
  CHECK_THROWS_AS(MixedProfile({{0.5, 0.6}}).validate(), ValidationError);
  CHECK_THROWS_AS(MixedProfile({{-0.1, 1.1}}).validate(), ValidationError);

  MixedProfile pm = MixedProfile::point_mass({2, 3}, {1, 2});
  CHECK(pm.player(0) == std::vector<double>{0.0, 1.0});
  CHECK(pm.player(1) == std::vector<double>{0.0, 0.0, 1.0});

  MixedProfile u = MixedProfile::uniform({2, 4});
  CHECK(u.player(1)[0] == doctest::Approx(0.25));
}

TEST_CASE("joint distributions support point mass and product construction") {
  FiniteGame g = aumann_coordination();
  JointDistribution pm = JointDistribution::point_mass(g, {1, 0});
  CHECK(pm[2] == doctest::Approx(1.0));
  CHECK(pm[0] == doctest::Approx(0.0));

  JointDistribution prod =
      JointDistribution::product(g, MixedProfile({{0.5, 0.5}, {0.5, 0.5}}));
  for (int f = 0; f < 4; ++f) CHECK(prod[f] == doctest::Approx(0.25));
  CHECK_NOTHROW(prod.validate_for(g));
}

TEST_CASE("expected utility sums over the full profile space") {
  FiniteGame g = aumann_coordination();
  MixedProfile uniform = MixedProfile::uniform({2, 2});
  CHECK(expected_utility(g, uniform, 0) == doctest::Approx(2.5));
  CHECK(expected_utility(g, uniform, 1) == doctest::Approx(2.5));
  // Conditional deviation payoffs against the uniform opponent.
  CHECK(expected_utility_vs(g, uniform, 0, 0) == doctest::Approx(2.5));
  CHECK(expected_utility_vs(g, uniform, 0, 1) == doctest::Approx(2.5));
}

TEST_CASE("best response sets are sorted argmax sets") {
  FiniteGame g = cr_dilemma();
  // Wideband (0) is strictly dominant for both players.
  CHECK(best_response_set(g, {1, 0}, 0) == std::vector<int>{0});
  CHECK(best_response_set(g, {1, 1}, 0) == std::vector<int>{0});
  FiniteGame tie({2, 2}, {1, 1, 1, 1, 0, 0, 0, 0});
  CHECK(best_response_set(tie, {0, 0}, 0) == std::vector<int>{0, 1});
}

TEST_CASE("pure and mixed equilibrium predicates") {
  FiniteGame g = aumann_coordination();
  CHECK(is_pure_ne(g, {0, 0}));
  CHECK(is_pure_ne(g, {1, 1}));
  CHECK_FALSE(is_pure_ne(g, {0, 1}));
  CHECK(is_mixed_ne(g, MixedProfile({{0.5, 0.5}, {0.5, 0.5}})));
  CHECK_FALSE(is_mixed_ne(g, MixedProfile({{0.4, 0.6}, {0.5, 0.5}})));

  FiniteGame mp = matching_pennies();
  CHECK(is_mixed_ne(mp, MixedProfile({{0.5, 0.5}, {0.5, 0.5}})));
}

TEST_CASE("pareto optimality in strong and weak modes") {
  FiniteGame g = cr_dilemma();
  CHECK(is_pareto_optimal(g, {1, 1}));        // (3,3)
  CHECK_FALSE(is_pareto_optimal(g, {0, 0}));  // (1,1) beaten by (3,3)
  CHECK(is_pareto_optimal(g, {0, 1}));        // (4,0) undominated
  // Weak mode only rules out strict improvements for everyone.
  CHECK(is_pareto_optimal(g, {0, 0}, /*weak=*/false) == false);
  CHECK(is_pareto_optimal(g, {0, 1}, /*weak=*/true));
}

TEST_CASE("social optimum and price of anarchy") {
  FiniteGame g = cr_dilemma();
  SocialOptimum opt = social_optimum(g);
  CHECK(opt.profile == PureProfile{1, 1});
  CHECK(opt.welfare == doctest::Approx(6.0));
  CHECK(price_of_anarchy(g, {{0, 0}}) == doctest::Approx(3.0));
  // Zero equilibrium welfare with positive optimum gives +inf.
  FiniteGame z({2, 2}, {0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(std::isinf(price_of_anarchy(z, {{0, 0}})));
}

TEST_CASE("correlated and coarse correlated equilibrium predicates") {
  FiniteGame g = aumann_coordination();
  // Uniform over the two pure NE and the off-diagonal cooperative cell.
  JointDistribution q({1.0 / 3, 0.0, 1.0 / 3, 1.0 / 3});
  CHECK(is_correlated_equilibrium(g, q, 1e-9));
  CHECK(is_coarse_correlated_equilibrium(g, q, 1e-9));
  // Point mass on a non-equilibrium profile fails both.
  JointDistribution bad = JointDistribution::point_mass(g, {0, 1});
  CHECK_FALSE(is_correlated_equilibrium(g, bad));
  CHECK_FALSE(is_coarse_correlated_equilibrium(g, bad));
}

TEST_CASE("exact potential recovery on a congestion game") {
  FiniteGame g = duck_foraging(3, 24.0, 12.0);
  auto cert = find_exact_potential(g);
  REQUIRE(cert.has_value());
  // The defining identity: unilateral payoff differences match potential
  // differences on every edge.
  for (std::uint64_t f = 0; f < g.profile_count(); ++f) {
    PureProfile s = g.unflatten(f);
    for (int k = 0; k < 3; ++k) {
      PureProfile t = s;
      t[k] = 1 - t[k];
      double du = g.payoff(k, t) - g.payoff(k, s);
      double dphi = cert->values[g.flat_index(t)] - cert->values[f];
      CHECK(du == doctest::Approx(dphi).epsilon(1e-9));
    }
  }
  // Zero-sum games with no potential are rejected.
  CHECK_FALSE(find_exact_potential(matching_pennies()).has_value());
}

TEST_CASE("supermodularity via increasing differences") {
  FiniteGame coord({2, 2}, {1, 0, 0, 1, 1, 0, 0, 1});
  CHECK(is_supermodular(coord));
  CHECK_FALSE(is_supermodular(matching_pennies()));
}

TEST_CASE("joint sampling is deterministic per seed") {
  FiniteGame g = aumann_coordination();
  JointDistribution q({0.25, 0.25, 0.25, 0.25});
  PureProfile a = sample_joint(g, q, 42);
  PureProfile b = sample_joint(g, q, 42);
  CHECK(a == b);
  JointDistribution pm = JointDistribution::point_mass(g, {1, 1});
  CHECK(sample_joint(g, pm, 7) == PureProfile{1, 1});
}
