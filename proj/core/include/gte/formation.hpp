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

#ifndef GTE_FORMATION_HPP_
#define GTE_FORMATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gte/coalition.hpp"

namespace gte {

enum class AllocationRuleKind { kEqualSplit, kShapleyWithinCoalition, kIdentityNtu };

/// How a coalition's worth is distributed among its members. TU rules split
/// v(C) (sums match within 1e-9); the identity-NTU rule forwards the NTU
/// evaluator's per-member vector unchanged.
struct AllocationRule {
  AllocationRuleKind kind = AllocationRuleKind::kEqualSplit;
  std::function<std::vector<double>(Coalition)> ntu_evaluator;

  static AllocationRule equal_split();
  static AllocationRule shapley_within_coalition();
  static AllocationRule identity_ntu(std::function<std::vector<double>(Coalition)> fn);

  /// Per-member payoffs in ascending player order.
  std::vector<double> allocate(const TUGame& game, Coalition c) const;
};

struct FormationOp {
  bool is_merge = false;
  std::vector<Coalition> removed;
  std::vector<Coalition> added;
};

struct FormationState {
  Partition partition;
  std::vector<double> payoffs;  // one per player, consistent with partition
  std::vector<FormationOp> history;
  bool converged = false;
  int iterations = 0;  // applied merge/split operations
};

FormationState make_formation_state(const TUGame& game, const AllocationRule& rule,
                                    const Partition& init);

/// Component-wise >= with at least one strict improvement (margin 1e-12).
bool pareto_preferred(const std::vector<double>& x_new,
                      const std::vector<double>& x_old);

/// Applies the first merge of up to max_group coalitions (scanned in
/// lexicographic order, or shuffled when an order seed is given) whose
/// members' payoffs Pareto-improve. Returns false on no-op.
bool merge_step(FormationState& state, const TUGame& game,
                const AllocationRule& rule, int max_group = 2,
                std::optional<std::uint64_t> order_seed = std::nullopt);

/// Applies the first Pareto-improving split of a coalition: all 2-part
/// splits, plus full sub-partitions for coalitions of at most 6 players.
/// Returns false on no-op.
bool split_step(FormationState& state, const TUGame& game,
                const AllocationRule& rule,
                std::optional<std::uint64_t> order_seed = std::nullopt);

/// Alternates merge and split passes until a fixed point or max_iters
/// applied operations (converged flag reports which).
FormationState merge_split_run(const TUGame& game, const AllocationRule& rule,
                               const Partition& init, int max_iters,
                               int max_group = 2,
                               std::optional<std::uint64_t> order_seed = std::nullopt);

struct StabilityResult {
  bool stable = false;
  std::optional<FormationOp> violation;
};

/// Stable iff neither a merge (up to max_group) nor a split applies.
StabilityResult is_merge_split_stable(const FormationState& state,
                                      const TUGame& game,
                                      const AllocationRule& rule,
                                      int max_group = 2);

struct CentralizedComparison {
  Partition distributed;
  double distributed_total = 0.0;
  Partition centralized;
  double centralized_total = 0.0;
  bool coincide = false;
};

/// Merge-and-split from singletons versus the value-optimal partition.
/// The two need not coincide; the distributed total never exceeds the
/// centralized one.
CentralizedComparison compare_with_centralized(const TUGame& game,
                                               const AllocationRule& rule,
                                               int max_iters = 10'000);

}  // namespace gte

#endif  // GTE_FORMATION_HPP_
