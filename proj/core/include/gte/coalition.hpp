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

#ifndef GTE_COALITION_HPP_
#define GTE_COALITION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "gte/errors.hpp"

namespace gte {

/// Coalition as a bitmask over player indices.
using Coalition = std::uint32_t;

inline int coalition_size(Coalition c) { return __builtin_popcount(c); }

/// Transferable-utility game in characteristic form. Values are materialized
/// for all 2^K coalitions; K <= 20.
class TUGame {
 public:
  TUGame(int num_players, std::vector<double> values);
  static TUGame from_evaluator(int num_players,
                               const std::function<double(Coalition)>& fn);

  int num_players() const { return num_players_; }
  Coalition grand() const { return (Coalition{1} << num_players_) - 1; }
  double value(Coalition c) const { return values_[c]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int num_players_ = 0;
  std::vector<double> values_;
};

/// Non-transferable-utility game restricted to evaluator-returned payoff
/// vectors (one entry per member, ascending player index).
struct NTUGame {
  int num_players = 0;
  std::function<std::vector<double>(Coalition)> value;
};

using Allocation = std::vector<double>;

/// Disjoint non-empty coalitions covering all players; stored sorted by mask.
class Partition {
 public:
  Partition(int num_players, std::vector<Coalition> coalitions);
  static Partition singletons(int num_players);
  static Partition grand(int num_players);

  int num_players() const { return num_players_; }
  const std::vector<Coalition>& coalitions() const { return coalitions_; }
  bool operator==(const Partition& other) const {
    return coalitions_ == other.coalitions_;
  }

 private:
  int num_players_ = 0;
  std::vector<Coalition> coalitions_;
};

struct SuperadditivityResult {
  bool holds = true;
  std::optional<std::pair<Coalition, Coalition>> witness;  // violating pair
};

/// Checks v(C1 | C2) >= v(C1) + v(C2) over all disjoint non-empty pairs.
SuperadditivityResult is_superadditive(const TUGame& game);

struct ConvexityResult {
  bool holds = true;
  // (player, C1, C2): marginal into C1 exceeds the marginal into C2 >= C1.
  std::optional<std::tuple<int, Coalition, Coalition>> witness;
};

/// Non-decreasing marginal contributions. Verified through the equivalent
/// one-step condition v(C+i) + v(C+j) <= v(C+i+j) + v(C); a violation is
/// reported as the nested pair (C, C+j) for player i.
ConvexityResult is_convex(const TUGame& game);

struct CoreResult {
  bool nonempty = false;
  std::optional<Allocation> allocation;
  double lp_value = 0.0;  // min sum(x) subject to all coalition constraints
};

/// Core via LP: the core is non-empty iff the minimal total payoff meeting
/// every coalition constraint does not exceed v(K).
CoreResult core_solve(const TUGame& game);

bool in_core(const TUGame& game, const Allocation& x, double tol = 1e-9);

struct LeastCoreResult {
  double epsilon = 0.0;  // <= 0 iff the core is non-empty
  Allocation allocation;
};

/// Minimal uniform relaxation: sum_{i in C} x_i >= v(C) - eps (weak) or
/// v(C) - |C|*eps (strong) over proper non-empty C, with sum x = v(K).
LeastCoreResult least_epsilon_core(const TUGame& game, bool strong = false);

struct BalancednessResult {
  bool balanced = false;
  // For unbalanced games with K <= 12: balanced weights mu(C) with
  // sum_{C : i in C} mu(C) = 1 for every i and sum mu(C) v(C) > v(K).
  std::vector<std::pair<Coalition, double>> certificate;
};

/// Balanced iff the core is non-empty (Bondareva-Shapley duality); the
/// violating weight collection is recovered from the dual LP.
BalancednessResult is_balanced(const TUGame& game);

/// Exact Shapley value (O(K * 2^K), K <= 14).
Allocation shapley(const TUGame& game);

struct ShapleyMcResult {
  Allocation value;
  std::vector<double> std_errors;
};

/// Permutation-sampling estimate of the Shapley value; unbiased. With
/// exhaustive = true all K! join orders are enumerated instead (K <= 10)
/// and the result is exact.
ShapleyMcResult shapley_monte_carlo(const TUGame& game, std::int64_t samples,
                                    std::uint64_t seed, bool exhaustive = false);

struct OptimalPartitionResult {
  Partition partition;
  double total = 0.0;
};

/// Partition maximizing the summed coalition values, by dynamic programming
/// over subsets (K <= 16). Ties resolved by always extracting the smallest
/// qualifying coalition mask first.
OptimalPartitionResult optimal_partition(const TUGame& game);

/// Membership in the coalition-structure core: total payoff matches the
/// optimal partition value and no coalition can improve on its share.
bool coalition_structure_core_check(const TUGame& game, const Allocation& x,
                                    double tol = 1e-9);

}  // namespace gte

#endif  // GTE_COALITION_HPP_
