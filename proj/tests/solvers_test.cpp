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
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "gte/game_ops.hpp"
#include "gte/scenarios.hpp"
#include "gte/solvers.hpp"

using namespace gte;

namespace {

FiniteGame matching_pennies() {
  return FiniteGame({2, 2}, {1, -1, -1, 1, -1, 1, 1, -1});
}

bool is_point_mass_at(const MixedProfile& m, const PureProfile& profile) {
  for (int k = 0; k < m.num_players(); ++k) {
    for (std::size_t a = 0; a < m.player(k).size(); ++a) {
      double want = (static_cast<int>(a) == profile[k]) ? 1.0 : 0.0;
      if (m.player(k)[a] != want) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("pure equilibrium enumeration is exact and ordered") {
  FiniteGame g = aumann_coordination();
  std::vector<PureProfile> ne = enumerate_pure_ne(g);
  REQUIRE(ne.size() == 2);
  CHECK(ne[0] == PureProfile{0, 0});
  CHECK(ne[1] == PureProfile{1, 1});
  CHECK(enumerate_pure_ne(matching_pennies()).empty());
  // Three-player coordination game.
  FiniteGame g3({2, 2, 2}, {1, 0, 0, 0, 0, 0, 0, 1,
                            1, 0, 0, 0, 0, 0, 0, 1,
                            1, 0, 0, 0, 0, 0, 0, 1});
  std::vector<PureProfile> ne3 = enumerate_pure_ne(g3);
  REQUIRE(ne3.size() == 2);
  CHECK(ne3[0] == PureProfile{0, 0, 0});
  CHECK(ne3[1] == PureProfile{1, 1, 1});
}

TEST_CASE("2x2 closed form finds pure and interior equilibria") {
  std::vector<MixedProfile> eq = mixed_ne_2x2(aumann_coordination());
  REQUIRE(eq.size() == 3);
  int interior = 0, pure = 0;
  for (const MixedProfile& m : eq) {
    if (m.player(0)[0] > 0.0 && m.player(0)[0] < 1.0) {
      ++interior;
      CHECK(m.player(0)[0] == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(m.player(1)[0] == doctest::Approx(0.5).epsilon(1e-12));
    } else {
      ++pure;
    }
    CHECK(is_mixed_ne(aumann_coordination(), m, 1e-9));
  }
  CHECK(interior == 1);
  CHECK(pure == 2);

  // Dominance-solvable games have exactly the one point mass.
  std::vector<MixedProfile> sd = mixed_ne_2x2(sensor_dilemma(0.3));
  REQUIRE(sd.size() == 1);
  CHECK(is_point_mass_at(sd[0], {0, 0}));

  std::vector<MixedProfile> mp = mixed_ne_2x2(matching_pennies());
  REQUIRE(mp.size() == 1);
  CHECK(mp[0].player(0)[0] == doctest::Approx(0.5));
  CHECK(mp[0].player(1)[0] == doctest::Approx(0.5));
}

TEST_CASE("support enumeration reproduces the closed form on 2x2 games") {
  std::vector<MixedProfile> eq = support_enumeration_2p(aumann_coordination());
  CHECK(eq.size() == 3);
  for (const MixedProfile& m : eq) {
    CHECK(is_mixed_ne(aumann_coordination(), m, 1e-6));
  }
}

TEST_CASE("support enumeration handles a 3x3 game with a known interior NE") {
  // Rock-paper-scissors: the unique NE is uniform.
  std::vector<double> u1 = {0, -1, 1, 1, 0, -1, -1, 1, 0};
  std::vector<double> u2;
  for (double v : u1) u2.push_back(-v);
  std::vector<double> payoffs = u1;
  payoffs.insert(payoffs.end(), u2.begin(), u2.end());
  FiniteGame rps({3, 3}, payoffs);
  std::vector<MixedProfile> eq = support_enumeration_2p(rps);
  REQUIRE(eq.size() == 1);
  for (int k = 0; k < 2; ++k)
    for (int a = 0; a < 3; ++a)
      CHECK(eq[0].player(k)[a] == doctest::Approx(1.0 / 3).epsilon(1e-9));
}

TEST_CASE("zero-sum value via the maximin program") {
  ZeroSumSolution mp = zero_sum_value(matching_pennies());
  CHECK(mp.value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(mp.strategies.player(0)[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(mp.strategies.player(1)[0] == doctest::Approx(0.5).epsilon(1e-6));

  // 2x3 game: u1 rows {(3,-1,0),(-2,4,1)}. Value solves the mixed maximin.
  std::vector<double> u1 = {3, -1, 0, -2, 4, 1};
  std::vector<double> payoffs = u1;
  for (double v : u1) payoffs.push_back(-v);
  FiniteGame g({2, 3}, payoffs);
  ZeroSumSolution sol = zero_sum_value(g);
  // Columns 2 and 3 mix: value = max_p min(3p-2(1-p), -p+4(1-p), 0p+(1-p)).
  // Lines 5p-2 and 1-p cross at p=0.5 giving 0.5.
  CHECK(sol.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(is_mixed_ne(g, sol.strategies, 1e-6));
}

TEST_CASE("zero-sum accepts positive affine transforms of the column payoffs") {
  FiniteGame base = matching_pennies();
  std::vector<double> payoffs = base.dense_payoffs();
  for (int f = 0; f < 4; ++f) payoffs[4 + f] = -2.0 * payoffs[f] + 3.0;
  FiniteGame g({2, 2}, payoffs);
  ZeroSumSolution sol = zero_sum_value(g);
  CHECK(sol.value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_THROWS_AS(zero_sum_value(aumann_coordination()), ValidationError);
}

TEST_CASE("welfare optimization over the correlated equilibrium polytope") {
  FiniteGame g = aumann_coordination();
  EquilibriumOptimum ce = optimize_over_equilibrium_set(
      g, {1.0, 1.0}, EquilibriumConcept::kCorrelated);
  CHECK(ce.objective == doctest::Approx(20.0 / 3).epsilon(1e-6));
  CHECK(ce.expected_utilities[0] == doctest::Approx(10.0 / 3).epsilon(1e-6));
  CHECK(ce.expected_utilities[1] == doctest::Approx(10.0 / 3).epsilon(1e-6));
  CHECK(is_correlated_equilibrium(g, ce.q, 1e-6));

  // A dominance-solvable dilemma admits only the equilibrium point even as
  // a coarse correlated equilibrium.
  EquilibriumOptimum cce = optimize_over_equilibrium_set(
      cr_dilemma(), {1.0, 1.0}, EquilibriumConcept::kCoarseCorrelated);
  CHECK(cce.objective == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(is_coarse_correlated_equilibrium(cr_dilemma(), cce.q, 1e-6));
}

TEST_CASE("asymmetric weights steer the correlated optimum") {
  FiniteGame g = aumann_coordination();
  EquilibriumOptimum ce = optimize_over_equilibrium_set(
      g, {1.0, 0.0}, EquilibriumConcept::kCorrelated);
  // Best correlated payoff for player 0 alone is the (5,1) equilibrium.
  CHECK(ce.objective == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("bargaining over a continuous frontier") {
  // Split a unit surplus: u1 = s, u2 = 1 - s with s = player 1's action.
  ContinuousGame g;
  g.num_players = 2;
  g.bounds = {{{0.0, 1.0}}, {{0.0, 1.0}}};
  g.utility = [](int k, const ContinuousGame::Profile& s) {
    return k == 0 ? s[0][0] : 1.0 - s[0][0];
  };
  NashBargainingResult r = nash_bargaining(g, {0.0, 0.0}, 33);
  CHECK(r.utilities[0] == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(r.utilities[1] == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(r.nash_product == doctest::Approx(0.25).epsilon(1e-4));

  // An asymmetric status quo shifts the solution: maximize (s-.5)(1-s).
  NashBargainingResult biased = nash_bargaining(g, {0.5, 0.0}, 33);
  CHECK(biased.utilities[0] == doctest::Approx(0.75).epsilon(1e-4));
  CHECK(biased.utilities[1] == doctest::Approx(0.25).epsilon(1e-4));
}

TEST_CASE("bargaining over pure profiles of a finite game") {
  NashBargainingResult r = nash_bargaining(cr_dilemma(), {1.0, 1.0});
  CHECK(r.utilities[0] == doctest::Approx(3.0));
  CHECK(r.utilities[1] == doctest::Approx(3.0));
  CHECK(r.nash_product == doctest::Approx(4.0));
}
