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

#ifndef GTE_DYNAMICS_HPP_
#define GTE_DYNAMICS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gte/finite_game.hpp"

namespace gte {

struct TraceRecord {
  // Action profile (indices for finite games), flattened coordinates for
  // continuous games, or node states for consensus.
  std::vector<double> values;
  std::vector<double> utilities;  // empty when not applicable
};

struct LearningTrace {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<TraceRecord> records;  // one per executed iteration
  bool converged = false;
  int iterations = 0;
  std::optional<JointDistribution> empirical_joint;
  // Per-player mixed strategies at the end of the run (empirical frequencies
  // for fictitious play, policies for reinforcement-style rules).
  std::vector<std::vector<double>> final_policies;
};

enum class ScheduleKind { kFiniteAverage, kDiscounted, kRunningAverage };

struct WeightSchedule {
  ScheduleKind kind = ScheduleKind::kRunningAverage;
  int horizon = 0;        // finite-average only
  double discount = 0.0;  // discounted only, in [0,1)

  static WeightSchedule finite_average(int horizon);
  static WeightSchedule discounted(double delta);
  static WeightSchedule running_average();

  /// Weight of stage t (1-based) over a realized horizon of T stages.
  double weight(int t, int T) const;
  void validate() const;
};

struct ConsensusNetwork {
  int num_nodes = 0;
  std::vector<std::vector<int>> neighbors;     // A_k
  std::vector<std::vector<double>> weights;    // beta_{k,j}, aligned with neighbors

  void validate() const;
};

/// Round-robin best-response dynamics. One iteration is a full round over
/// the players. Ties in the finite best-response set are broken uniformly
/// at random from the seed. Converges when a full round changes nothing
/// (finite games require eps = 0; continuous games use a sup-norm step test).
LearningTrace brd_sequential(const FiniteGame& game, const PureProfile& init,
                             double eps, int max_iters, std::uint64_t seed);
LearningTrace brd_sequential(const ContinuousGame& game,
                             const ContinuousGame::Profile& init, double eps,
                             int max_iters, std::uint64_t seed);

/// All players best-respond simultaneously to the previous profile. With
/// kappa > 0 the objective gains a stabilizing penalty -kappa*||a - a_prev||^2
/// (squared index distance for finite games).
LearningTrace brd_simultaneous(const FiniteGame& game, const PureProfile& init,
                               double eps, int max_iters, double kappa,
                               std::uint64_t seed);
LearningTrace brd_simultaneous(const ContinuousGame& game,
                               const ContinuousGame::Profile& init, double eps,
                               int max_iters, double kappa, std::uint64_t seed);

/// Fictitious play: each player best-responds to the product of opponents'
/// empirical marginals, updated by the recursion f(t+1) = f(t) +
/// (e_a - f(t))/(t+1). Ties broken lowest index.
LearningTrace fictitious_play(const FiniteGame& game, const PureProfile& init,
                              int T, std::uint64_t seed);

/// Bush-Mosteller reinforcement learning. Requires all payoffs in [0, 1]
/// (see normalize_utilities); lambda in (0, 1).
LearningTrace bush_mosteller(const FiniteGame& game, const MixedProfile& init,
                             double lambda, int T, std::uint64_t seed);

/// Regret matching with incremental regret updates and play proportional to
/// positive-part regrets (uniform when all regrets are non-positive). The
/// empirical joint frequency of play is recorded.
LearningTrace regret_matching(const FiniteGame& game, int T, std::uint64_t seed);

/// Synchronous linear consensus: a_k += sum_j beta_{k,j} (a_j - a_k). Stops
/// when the max node change is at most eps.
LearningTrace consensus(const ConsensusNetwork& network,
                        const std::vector<double>& init, double eps,
                        int max_iters);

/// Pure strategy for repeated play: maps the (strictly earlier) history of
/// profiles to this player's next action.
using HistoryStrategy =
    std::function<int(const std::vector<PureProfile>& history)>;

struct RepeatedGameResult {
  std::vector<double> long_run_utilities;
  std::vector<PureProfile> history;
};

/// Plays T stages of the stage game under causal strategies and returns
/// sum_t theta_t u_k(a(t)) under the schedule.
RepeatedGameResult repeated_game_run(const FiniteGame& stage,
                                     const std::vector<HistoryStrategy>& strategies,
                                     const WeightSchedule& schedule, int T);

/// Per-player affine rescale of payoffs to [0, 1]; constant payoffs map
/// to 0. Best-response structure is preserved.
FiniteGame normalize_utilities(const FiniteGame& game);

}  // namespace gte

#endif  // GTE_DYNAMICS_HPP_
