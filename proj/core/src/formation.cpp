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

#include "gte/formation.hpp"

#include <algorithm>
#include <cmath>

#include "gte/rng.hpp"

namespace gte {

namespace {

std::vector<int> members_of(Coalition c) {
  std::vector<int> out;
  for (int i = 0; c != 0; ++i, c >>= 1) {
    if (c & 1) out.push_back(i);
  }
  return out;
}

// All partitions of `members` into at least two blocks, in the order given
// by "each element joins an earlier block or opens a new one".
void sub_partitions(const std::vector<int>& members, std::size_t index,
                    std::vector<Coalition>& blocks,
                    std::vector<std::vector<Coalition>>& out) {
  if (index == members.size()) {
    if (blocks.size() >= 2) out.push_back(blocks);
    return;
  }
  const Coalition bit = Coalition{1} << members[index];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] |= bit;
    sub_partitions(members, index + 1, blocks, out);
    blocks[b] &= ~bit;
  }
  blocks.push_back(bit);
  sub_partitions(members, index + 1, blocks, out);
  blocks.pop_back();
}

// Payoffs of the given players (ascending) under a candidate block set.
std::vector<double> candidate_payoffs(const TUGame& game, const AllocationRule& rule,
                                      const std::vector<Coalition>& blocks,
                                      const std::vector<int>& players) {
  std::vector<double> per_player(game.num_players(), 0.0);
  for (Coalition c : blocks) {
    const std::vector<double> alloc = rule.allocate(game, c);
    const std::vector<int> mem = members_of(c);
    for (std::size_t i = 0; i < mem.size(); ++i) per_player[mem[i]] = alloc[i];
  }
  std::vector<double> out;
  out.reserve(players.size());
  for (int p : players) out.push_back(per_player[p]);
  return out;
}

void apply_op(FormationState& state, const TUGame& game, const AllocationRule& rule,
              FormationOp op) {
  std::vector<Coalition> blocks = state.partition.coalitions();
  for (Coalition c : op.removed) {
    blocks.erase(std::find(blocks.begin(), blocks.end(), c));
  }
  blocks.insert(blocks.end(), op.added.begin(), op.added.end());
  state.partition = Partition(game.num_players(), std::move(blocks));
  for (Coalition c : op.added) {
    const std::vector<double> alloc = rule.allocate(game, c);
    const std::vector<int> mem = members_of(c);
    for (std::size_t i = 0; i < mem.size(); ++i) state.payoffs[mem[i]] = alloc[i];
  }
  state.history.push_back(std::move(op));
}

// Combinations of block indices, sizes ascending then lexicographic.
std::vector<std::vector<int>> merge_candidates(int num_blocks, int max_group) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int size) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < num_blocks; ++i) {
      cur.push_back(i);
      self(self, i + 1, size);
      cur.pop_back();
    }
  };
  for (int size = 2; size <= std::min(max_group, num_blocks); ++size) {
    rec(rec, 0, size);
  }
  return out;
}

}  // namespace

AllocationRule AllocationRule::equal_split() { return AllocationRule{}; }

AllocationRule AllocationRule::shapley_within_coalition() {
  AllocationRule r;
  r.kind = AllocationRuleKind::kShapleyWithinCoalition;
  return r;
}

AllocationRule AllocationRule::identity_ntu(
    std::function<std::vector<double>(Coalition)> fn) {
  AllocationRule r;
  r.kind = AllocationRuleKind::kIdentityNtu;
  r.ntu_evaluator = std::move(fn);
  return r;
}

std::vector<double> AllocationRule::allocate(const TUGame& game, Coalition c) const {
  const std::vector<int> mem = members_of(c);
  if (mem.empty()) throw ValidationError("cannot allocate to an empty coalition");
  switch (kind) {
    case AllocationRuleKind::kEqualSplit:
      return std::vector<double>(mem.size(), game.value(c) / mem.size());
    case AllocationRuleKind::kShapleyWithinCoalition: {
      // Shapley value of the subgame restricted to the coalition's members.
      const TUGame sub = TUGame::from_evaluator(
          static_cast<int>(mem.size()), [&](Coalition s) {
            Coalition full = 0;
            for (std::size_t i = 0; i < mem.size(); ++i) {
              if (s & (Coalition{1} << i)) full |= Coalition{1} << mem[i];
            }
            return game.value(full);
          });
      return shapley(sub);
    }
    case AllocationRuleKind::kIdentityNtu: {
      if (!ntu_evaluator) throw ValidationError("identity rule needs an NTU evaluator");
      std::vector<double> x = ntu_evaluator(c);
      if (x.size() != mem.size()) {
        throw ValidationError("NTU evaluator must return one payoff per member");
      }
      return x;
    }
  }
  throw ValidationError("unknown allocation rule");
}

FormationState make_formation_state(const TUGame& game, const AllocationRule& rule,
                                    const Partition& init) {
  if (init.num_players() != game.num_players()) {
    throw ValidationError("partition player count must match the game");
  }
  FormationState state{init, std::vector<double>(game.num_players(), 0.0), {}, false, 0};
  for (Coalition c : init.coalitions()) {
    const std::vector<double> alloc = rule.allocate(game, c);
    const std::vector<int> mem = members_of(c);
    for (std::size_t i = 0; i < mem.size(); ++i) state.payoffs[mem[i]] = alloc[i];
  }
  return state;
}

bool pareto_preferred(const std::vector<double>& x_new,
                      const std::vector<double>& x_old) {
  if (x_new.size() != x_old.size()) {
    throw ValidationError("payoff vectors must cover the same players");
  }
  bool strict = false;
  for (std::size_t i = 0; i < x_new.size(); ++i) {
    if (x_new[i] < x_old[i] - 1e-12) return false;
    if (x_new[i] > x_old[i] + 1e-12) strict = true;
  }
  return strict;
}

bool merge_step(FormationState& state, const TUGame& game,
                const AllocationRule& rule, int max_group,
                std::optional<std::uint64_t> order_seed) {
  if (max_group < 2 || max_group > 4) {
    throw ValidationError("merge arity must be between 2 and 4");
  }
  const std::vector<Coalition>& blocks = state.partition.coalitions();
  std::vector<std::vector<int>> candidates =
      merge_candidates(static_cast<int>(blocks.size()), max_group);
  if (order_seed) {
    Rng rng(*order_seed);
    rng.shuffle(candidates);
  }

  for (const auto& group : candidates) {
    Coalition merged = 0;
    for (int b : group) merged |= blocks[b];
    const std::vector<int> players = members_of(merged);
    std::vector<double> old_payoffs;
    old_payoffs.reserve(players.size());
    for (int p : players) old_payoffs.push_back(state.payoffs[p]);
    const std::vector<double> new_payoffs =
        candidate_payoffs(game, rule, {merged}, players);
    if (!pareto_preferred(new_payoffs, old_payoffs)) continue;

    FormationOp op;
    op.is_merge = true;
    for (int b : group) op.removed.push_back(blocks[b]);
    op.added.push_back(merged);
    apply_op(state, game, rule, std::move(op));
    return true;
  }
  return false;
}

bool split_step(FormationState& state, const TUGame& game,
                const AllocationRule& rule,
                std::optional<std::uint64_t> order_seed) {
  std::vector<Coalition> blocks = state.partition.coalitions();
  std::optional<Rng> rng;
  if (order_seed) {
    rng.emplace(*order_seed);
    rng->shuffle(blocks);
  }

  for (Coalition block : blocks) {
    const std::vector<int> mem = members_of(block);
    if (mem.size() < 2) continue;

    std::vector<std::vector<Coalition>> candidates;
    if (mem.size() <= 6) {
      std::vector<Coalition> scratch;
      sub_partitions(mem, 0, scratch, candidates);
    } else {
      // 2-part splits; the part holding the lowest member avoids duplicates.
      const Coalition low = Coalition{1} << mem[0];
      const Coalition rest = block & ~low;
      for (Coalition sub = 0;;) {
        const Coalition part1 = sub | low;
        if (part1 != block) candidates.push_back({part1, block & ~part1});
        if (sub == rest) break;
        sub = (sub - rest) & rest;
      }
    }
    if (rng) rng->shuffle(candidates);

    std::vector<double> old_payoffs;
    old_payoffs.reserve(mem.size());
    for (int p : mem) old_payoffs.push_back(state.payoffs[p]);
    for (const auto& parts : candidates) {
      const std::vector<double> new_payoffs =
          candidate_payoffs(game, rule, parts, mem);
      if (!pareto_preferred(new_payoffs, old_payoffs)) continue;
      FormationOp op;
      op.is_merge = false;
      op.removed.push_back(block);
      op.added = parts;
      apply_op(state, game, rule, std::move(op));
      return true;
    }
  }
  return false;
}

FormationState merge_split_run(const TUGame& game, const AllocationRule& rule,
                               const Partition& init, int max_iters, int max_group,
                               std::optional<std::uint64_t> order_seed) {
  if (max_iters <= 0) throw ValidationError("max_iters must be positive");
  FormationState state = make_formation_state(game, rule, init);
  std::uint64_t chain = order_seed.value_or(0);

  auto next_seed = [&]() -> std::optional<std::uint64_t> {
    if (!order_seed) return std::nullopt;
    return splitmix64(chain);
  };

  for (;;) {
    bool applied = false;
    while (state.iterations < max_iters &&
           merge_step(state, game, rule, max_group, next_seed())) {
      ++state.iterations;
      applied = true;
    }
    while (state.iterations < max_iters &&
           split_step(state, game, rule, next_seed())) {
      ++state.iterations;
      applied = true;
    }
    if (!applied) {
      state.converged = true;
      break;
    }
    if (state.iterations >= max_iters) {
      state.converged = false;
      break;
    }
  }
  return state;
}

StabilityResult is_merge_split_stable(const FormationState& state,
                                      const TUGame& game,
                                      const AllocationRule& rule, int max_group) {
  FormationState probe = state;
  if (merge_step(probe, game, rule, max_group)) {
    return {false, probe.history.back()};
  }
  if (split_step(probe, game, rule)) {
    return {false, probe.history.back()};
  }
  return {true, std::nullopt};
}

CentralizedComparison compare_with_centralized(const TUGame& game,
                                               const AllocationRule& rule,
                                               int max_iters) {
  if (game.num_players() > 10) {
    throw CapacityError("comparison supports at most 10 players");
  }
  const FormationState run = merge_split_run(
      game, rule, Partition::singletons(game.num_players()), max_iters);
  const OptimalPartitionResult opt = optimal_partition(game);

  CentralizedComparison out{run.partition, 0.0, opt.partition, opt.total, false};
  for (Coalition c : run.partition.coalitions()) {
    out.distributed_total += game.value(c);
  }
  out.coincide = run.partition == opt.partition;
  return out;
}

}  // namespace gte
