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

#ifndef GTE_FINITE_GAME_HPP_
#define GTE_FINITE_GAME_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gte/errors.hpp"

namespace gte {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::uint64_t kMaxProfileCells = 10'000'000;

using PureProfile = std::vector<int>;

/// Strategic-form game with finite action sets.
///
/// Payoffs are stored either as a dense tensor (player-major, profiles in
/// lexicographic order with player 0 most significant) or behind a payoff
/// evaluator for games whose profile space is too large to materialize
/// (e.g. symmetric congestion games with many players). Operations that
/// enumerate the whole profile space require dense storage and raise
/// CapacityError otherwise.
class FiniteGame {
 public:
  using PayoffFn = std::function<double(int player, const PureProfile&)>;

  FiniteGame(std::vector<int> action_counts, std::vector<double> payoffs);

  static FiniteGame from_evaluator(std::vector<int> action_counts, PayoffFn fn);

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int action_count(int player) const { return action_counts_[player]; }
  const std::vector<int>& action_counts() const { return action_counts_; }

  /// Number of pure profiles; throws CapacityError above the dense cap.
  std::uint64_t profile_count() const;

  bool is_dense() const { return !payoffs_.empty(); }
  const std::vector<double>& dense_payoffs() const { return payoffs_; }

  double payoff(int player, const PureProfile& profile) const;
  double payoff_flat(int player, std::uint64_t flat) const;

  std::uint64_t flat_index(const PureProfile& profile) const;
  PureProfile unflatten(std::uint64_t flat) const;

  void validate_profile(const PureProfile& profile) const;

  // Optional labels; bijective with indices when present.
  std::optional<std::vector<std::vector<std::string>>> action_labels;
  std::optional<std::vector<std::string>> player_labels;

 private:
  FiniteGame() = default;
  void require_dense(const char* op) const;

  std::vector<int> action_counts_;
  std::vector<double> payoffs_;  // empty when evaluator-backed
  PayoffFn evaluator_;
  std::uint64_t profile_count_ = 0;  // 0 when above the dense cap
};

/// One probability simplex per player.
class MixedProfile {
 public:
  MixedProfile() = default;
  explicit MixedProfile(std::vector<std::vector<double>> probs);

  static MixedProfile point_mass(const std::vector<int>& action_counts,
                                 const PureProfile& profile);
  static MixedProfile uniform(const std::vector<int>& action_counts);

  int num_players() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& player(int k) const { return probs_[k]; }
  const std::vector<std::vector<double>>& probs() const { return probs_; }

  void validate(double tol = kDefaultTol) const;
  void validate_for(const FiniteGame& game, double tol = kDefaultTol) const;

 private:
  std::vector<std::vector<double>> probs_;
};

/// Probability distribution over full action profiles, flat lexicographic.
class JointDistribution {
 public:
  JointDistribution() = default;
  explicit JointDistribution(std::vector<double> probs);

  static JointDistribution point_mass(const FiniteGame& game,
                                      const PureProfile& profile);
  static JointDistribution product(const FiniteGame& game,
                                   const MixedProfile& mixed);

  const std::vector<double>& probs() const { return probs_; }
  double operator[](std::uint64_t flat) const { return probs_[flat]; }
  std::uint64_t size() const { return probs_.size(); }

  void validate(double tol = kDefaultTol) const;
  void validate_for(const FiniteGame& game, double tol = kDefaultTol) const;

 private:
  std::vector<double> probs_;
};

/// Game over compact box action spaces with a utility evaluator and
/// optional best-response / gradient oracles.
struct ContinuousGame {
  using Profile = std::vector<std::vector<double>>;
  using UtilityFn = std::function<double(int player, const Profile&)>;
  using BestResponseFn = std::function<std::vector<double>(int player, const Profile&)>;
  using GradientFn = std::function<std::vector<double>(int player, const Profile&)>;

  int num_players = 0;
  // bounds[k][d] = (lower, upper) for coordinate d of player k's action.
  std::vector<std::vector<std::pair<double, double>>> bounds;
  UtilityFn utility;
  BestResponseFn best_response;  // may be empty
  GradientFn gradient;           // may be empty

  int action_dim(int player) const { return static_cast<int>(bounds[player].size()); }
  void validate() const;
  void validate_profile(const Profile& s) const;
};

/// Values of an exact potential, indexed like a flat payoff tensor.
struct PotentialCertificate {
  std::vector<double> values;
};

}  // namespace gte

#endif  // GTE_FINITE_GAME_HPP_
