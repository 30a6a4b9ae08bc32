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

#ifndef GTE_GAME_OPS_HPP_
#define GTE_GAME_OPS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gte/finite_game.hpp"

namespace gte {

/// Exact expected utility of `player` under independent mixing (sum over
/// every pure profile).
double expected_utility(const FiniteGame& game, const MixedProfile& profile,
                        int player);

/// Expected utility of `player` when it plays pure `action` and everyone
/// else follows `profile`.
double expected_utility_vs(const FiniteGame& game, const MixedProfile& profile,
                           int player, int action);

/// All argmax actions of `player` against the opponent actions in `profile`
/// (the player's own coordinate is ignored). Ascending indices.
std::vector<int> best_response_set(const FiniteGame& game,
                                   const PureProfile& profile, int player);

bool is_pure_ne(const FiniteGame& game, const PureProfile& profile);

/// Deviations to pure strategies suffice by linearity of the expectation.
bool is_mixed_ne(const FiniteGame& game, const MixedProfile& profile,
                 double tol = kDefaultTol);

/// Strong mode: no profile weakly dominates with one strict improvement.
/// Weak mode: no profile strictly improves every player.
bool is_pareto_optimal(const FiniteGame& game, const PureProfile& profile,
                       bool weak = false);

struct SocialOptimum {
  PureProfile profile;
  double welfare = 0.0;
};

/// Welfare maximizer; ties broken by lexicographically smallest profile.
SocialOptimum social_optimum(const FiniteGame& game);

/// Max welfare over profiles divided by min welfare over `ne_set`.
/// Returns +inf when the denominator is <= 0 and the numerator is > 0.
double price_of_anarchy(const FiniteGame& game,
                        const std::vector<PureProfile>& ne_set);

bool is_correlated_equilibrium(const FiniteGame& game,
                               const JointDistribution& q,
                               double tol = kDefaultTol);

bool is_coarse_correlated_equilibrium(const FiniteGame& game,
                                      const JointDistribution& q,
                                      double tol = kDefaultTol);

/// Builds a potential by integrating unilateral payoff differences along
/// coordinate paths from the all-zeros profile, then verifies the defining
/// identity on every unilateral edge. Absent when verification fails.
std::optional<PotentialCertificate> find_exact_potential(
    const FiniteGame& game, double tol = kDefaultTol);

/// Increasing differences over the index order on every player's actions.
bool is_supermodular(const FiniteGame& game);

struct DscResult {
  bool pass = true;  // a pass is sampling evidence, not a proof
  std::optional<std::pair<ContinuousGame::Profile, ContinuousGame::Profile>>
      counterexample;
};

/// Samples profile pairs and checks the diagonal strict concavity condition
/// (s - s') . (gamma_r(s') - gamma_r(s)) > 0 at each pair.
DscResult check_dsc(const ContinuousGame& game, const std::vector<double>& r,
                    int samples, std::uint64_t seed);

/// Inverse-CDF draw over the flattened profile order; deterministic per seed.
PureProfile sample_joint(const FiniteGame& game, const JointDistribution& q,
                         std::uint64_t seed);

}  // namespace gte

#endif  // GTE_GAME_OPS_HPP_
