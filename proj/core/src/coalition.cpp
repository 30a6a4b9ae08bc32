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

#include "gte/coalition.hpp"

#include <algorithm>
#include <cmath>

#include "gte/lp.hpp"
#include "gte/rng.hpp"

namespace gte {

namespace {

constexpr int kMaxPlayers = 20;
constexpr int kMaxEnumeration = 16;  // pairwise / subset-DP scans
constexpr int kMaxLpPlayers = 14;    // 2^K constraint LPs and exact Shapley
constexpr double kCoreTol = 1e-7;

void check_players(const TUGame& game, int cap, const char* what) {
  if (game.num_players() > cap) {
    throw CapacityError(std::string(what) + " supports at most " +
                        std::to_string(cap) + " players");
  }
}

std::vector<int> members_of(Coalition c) {
  std::vector<int> out;
  for (int i = 0; c != 0; ++i, c >>= 1) {
    if (c & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

TUGame::TUGame(int num_players, std::vector<double> values)
    : num_players_(num_players), values_(std::move(values)) {
  if (num_players < 1) throw ValidationError("at least one player required");
  if (num_players > kMaxPlayers) {
    throw CapacityError("TU games support at most 20 players");
  }
  if (values_.size() != (std::size_t{1} << num_players)) {
    throw ValidationError("value table must cover all 2^K coalitions");
  }
  if (values_[0] != 0.0) throw ValidationError("the empty coalition must be worth 0");
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("coalition values must be finite");
  }
}

TUGame TUGame::from_evaluator(int num_players,
                              const std::function<double(Coalition)>& fn) {
  if (num_players < 1) throw ValidationError("at least one player required");
  if (num_players > kMaxPlayers) {
    throw CapacityError("TU games support at most 20 players");
  }
  std::vector<double> values(std::size_t{1} << num_players);
  for (Coalition c = 1; c < values.size(); ++c) values[c] = fn(c);
  return TUGame(num_players, std::move(values));
}

Partition::Partition(int num_players, std::vector<Coalition> coalitions)
    : num_players_(num_players), coalitions_(std::move(coalitions)) {
  const Coalition grand = (Coalition{1} << num_players) - 1;
  Coalition seen = 0;
  for (Coalition c : coalitions_) {
    if (c == 0) throw ValidationError("partition blocks must be non-empty");
    if ((c & ~grand) != 0) throw ValidationError("coalition exceeds player set");
    if ((c & seen) != 0) throw ValidationError("partition blocks must be disjoint");
    seen |= c;
  }
  if (seen != grand) throw ValidationError("partition must cover every player");
  std::sort(coalitions_.begin(), coalitions_.end());
}

Partition Partition::singletons(int num_players) {
  std::vector<Coalition> blocks;
  for (int i = 0; i < num_players; ++i) blocks.push_back(Coalition{1} << i);
  return Partition(num_players, std::move(blocks));
}

Partition Partition::grand(int num_players) {
  return Partition(num_players, {(Coalition{1} << num_players) - 1});
}

SuperadditivityResult is_superadditive(const TUGame& game) {
  check_players(game, kMaxEnumeration, "superadditivity check");
  const Coalition grand = game.grand();
  for (Coalition c1 = 1; c1 <= grand; ++c1) {
    const Coalition rest = grand & ~c1;
    // Proper enumeration of non-empty submasks of the complement.
    for (Coalition c2 = rest; c2 != 0; c2 = (c2 - 1) & rest) {
      if (game.value(c1 | c2) < game.value(c1) + game.value(c2) - 1e-12) {
        return {false, std::make_pair(c1, c2)};
      }
    }
  }
  return {true, std::nullopt};
}

ConvexityResult is_convex(const TUGame& game) {
  check_players(game, kMaxEnumeration, "convexity check");
  const int K = game.num_players();
  const Coalition grand = game.grand();
  for (Coalition c = 0; c <= grand; ++c) {
    for (int i = 0; i < K; ++i) {
      const Coalition bi = Coalition{1} << i;
      if (c & bi) continue;
      for (int j = 0; j < K; ++j) {
        const Coalition bj = Coalition{1} << j;
        if (i == j || (c & bj)) continue;
        const double into_small = game.value(c | bi) - game.value(c);
        const double into_large = game.value(c | bj | bi) - game.value(c | bj);
        if (into_small > into_large + 1e-12) {
          return {false, std::make_tuple(i, c, c | bj)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

CoreResult core_solve(const TUGame& game) {
  check_players(game, kMaxLpPlayers, "core LP");
  const int K = game.num_players();
  const Coalition grand = game.grand();

  LinearProgram lp;
  lp.sense = LpSense::kMinimize;
  lp.objective.assign(K, 1.0);
  for (int i = 0; i < K; ++i) lp.make_free(i);
  for (Coalition c = 1; c <= grand; ++c) {
    std::vector<double> row(K, 0.0);
    for (int i : members_of(c)) row[i] = 1.0;
    lp.add_constraint(std::move(row), LpRelation::kGreaterEqual, game.value(c));
  }
  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::kOptimal) throw NumericalError("core LP failed");

  CoreResult out;
  out.lp_value = sol.value;
  out.nonempty = sol.value <= game.value(grand) + kCoreTol;
  if (out.nonempty) {
    // The optimum equals v(K); spread the numerical residue evenly so the
    // efficiency condition holds exactly.
    Allocation x = sol.x;
    double total = 0.0;
    for (double v : x) total += v;
    const double adjust = (game.value(grand) - total) / K;
    for (double& v : x) v += adjust;
    out.allocation = std::move(x);
  }
  return out;
}

bool in_core(const TUGame& game, const Allocation& x, double tol) {
  check_players(game, kMaxEnumeration, "core membership check");
  if (static_cast<int>(x.size()) != game.num_players()) {
    throw ValidationError("allocation length must match player count");
  }
  const Coalition grand = game.grand();
  std::vector<double> prefix(std::size_t{1} << game.num_players(), 0.0);
  for (Coalition c = 1; c <= grand; ++c) {
    const int low = __builtin_ctz(c);
    prefix[c] = prefix[c & (c - 1)] + x[low];
    if (prefix[c] < game.value(c) - tol) return false;
  }
  return std::abs(prefix[grand] - game.value(grand)) <= tol;
}

LeastCoreResult least_epsilon_core(const TUGame& game, bool strong) {
  check_players(game, kMaxLpPlayers, "least-core LP");
  const int K = game.num_players();
  const Coalition grand = game.grand();

  // Variables: x_1..x_K (free), eps (free).
  LinearProgram lp;
  lp.sense = LpSense::kMinimize;
  lp.objective.assign(K + 1, 0.0);
  lp.objective[K] = 1.0;
  for (int i = 0; i <= K; ++i) lp.make_free(i);
  {
    std::vector<double> row(K + 1, 1.0);
    row[K] = 0.0;
    lp.add_constraint(std::move(row), LpRelation::kEqual, game.value(grand));
  }
  for (Coalition c = 1; c < grand; ++c) {
    std::vector<double> row(K + 1, 0.0);
    for (int i : members_of(c)) row[i] = 1.0;
    row[K] = strong ? coalition_size(c) : 1.0;
    lp.add_constraint(std::move(row), LpRelation::kGreaterEqual, game.value(c));
  }
  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::kOptimal) throw NumericalError("least-core LP failed");

  LeastCoreResult out;
  out.epsilon = sol.x[K];
  out.allocation.assign(sol.x.begin(), sol.x.begin() + K);
  return out;
}

BalancednessResult is_balanced(const TUGame& game) {
  BalancednessResult out;
  out.balanced = core_solve(game).nonempty;
  if (out.balanced) return out;

  // Dual of the core LP over proper non-empty coalitions: a maximizing
  // weight collection demonstrates the violation of the balancedness
  // inequality. Skipped when the variable count exceeds the LP cap.
  const int K = game.num_players();
  const Coalition grand = game.grand();
  const std::size_t num_coalitions = (std::size_t{1} << K) - 2;
  if (num_coalitions > 4000) return out;

  LinearProgram lp;
  lp.sense = LpSense::kMaximize;
  lp.objective.resize(num_coalitions);
  for (Coalition c = 1; c < grand; ++c) lp.objective[c - 1] = game.value(c);
  for (int i = 0; i < K; ++i) {
    std::vector<double> row(num_coalitions, 0.0);
    for (Coalition c = 1; c < grand; ++c) {
      if (c & (Coalition{1} << i)) row[c - 1] = 1.0;
    }
    lp.add_constraint(std::move(row), LpRelation::kEqual, 1.0);
  }
  const LpSolution sol = lp_solve(lp);
  if (sol.status == LpStatus::kOptimal && sol.value > game.value(grand) + kCoreTol) {
    for (Coalition c = 1; c < grand; ++c) {
      if (sol.x[c - 1] > 1e-9) out.certificate.push_back({c, sol.x[c - 1]});
    }
  }
  return out;
}

Allocation shapley(const TUGame& game) {
  check_players(game, kMaxLpPlayers, "exact Shapley value");
  const int K = game.num_players();
  std::vector<double> fact(K + 1, 1.0);
  for (int i = 1; i <= K; ++i) fact[i] = fact[i - 1] * i;

  Allocation x(K, 0.0);
  const Coalition grand = game.grand();
  for (int i = 0; i < K; ++i) {
    const Coalition bi = Coalition{1} << i;
    const Coalition rest = grand & ~bi;
    // Enumerate all subsets of the other players, including the empty one.
    Coalition c = 0;
    for (;;) {
      const int s = coalition_size(c);
      const double w = fact[s] * fact[K - s - 1] / fact[K];
      x[i] += w * (game.value(c | bi) - game.value(c));
      if (c == rest) break;
      c = (c - rest) & rest;  // next subset of `rest`
    }
  }
  return x;
}

ShapleyMcResult shapley_monte_carlo(const TUGame& game, std::int64_t samples,
                                    std::uint64_t seed, bool exhaustive) {
  if (samples < 1) throw ValidationError("at least one sample required");
  const int K = game.num_players();

  std::vector<double> sum(K, 0.0), sumsq(K, 0.0);
  std::int64_t count = 0;
  auto accumulate = [&](const std::vector<int>& order) {
    Coalition c = 0;
    for (int i : order) {
      const Coalition bi = Coalition{1} << i;
      const double marginal = game.value(c | bi) - game.value(c);
      sum[i] += marginal;
      sumsq[i] += marginal * marginal;
      c |= bi;
    }
    ++count;
  };

  if (exhaustive) {
    if (K > 10) throw CapacityError("exhaustive mode supports at most 10 players");
    std::vector<int> order(K);
    for (int i = 0; i < K; ++i) order[i] = i;
    do {
      accumulate(order);
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    Rng rng(seed);
    std::vector<int> order(K);
    for (std::int64_t s = 0; s < samples; ++s) {
      for (int i = 0; i < K; ++i) order[i] = i;
      rng.shuffle(order);
      accumulate(order);
    }
  }

  ShapleyMcResult out;
  out.value.resize(K);
  out.std_errors.resize(K);
  for (int i = 0; i < K; ++i) {
    out.value[i] = sum[i] / count;
    const double var =
        count > 1 ? std::max(0.0, (sumsq[i] - sum[i] * sum[i] / count) / (count - 1))
                  : 0.0;
    out.std_errors[i] = std::sqrt(var / count);
  }
  return out;
}

OptimalPartitionResult optimal_partition(const TUGame& game) {
  check_players(game, kMaxEnumeration, "partition search");
  const Coalition grand = game.grand();
  const std::size_t n = std::size_t{1} << game.num_players();

  // best[s] = max total value of a partition of subset s; the extracted
  // block always contains the lowest set bit so each partition is counted
  // once. Strict improvement keeps the smallest qualifying block.
  std::vector<double> best(n, 0.0);
  std::vector<Coalition> choice(n, 0);
  for (Coalition s = 1; s <= grand; ++s) {
    const Coalition low = s & (~s + 1);
    const Coalition rest = s & ~low;
    double b = -kLpInf;
    Coalition pick = 0;
    // Submasks of `rest` in increasing order, each joined with the low bit.
    Coalition sub = 0;
    for (;;) {
      const Coalition block = sub | low;
      const double total = game.value(block) + best[s & ~block];
      if (total > b + 1e-12) {
        b = total;
        pick = block;
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
    best[s] = b;
    choice[s] = pick;
  }

  std::vector<Coalition> blocks;
  for (Coalition s = grand; s != 0; s &= ~choice[s]) blocks.push_back(choice[s]);
  return {Partition(game.num_players(), std::move(blocks)), best[grand]};
}

bool coalition_structure_core_check(const TUGame& game, const Allocation& x,
                                    double tol) {
  check_players(game, kMaxLpPlayers, "coalition-structure core check");
  if (static_cast<int>(x.size()) != game.num_players()) {
    throw ValidationError("allocation length must match player count");
  }
  const Coalition grand = game.grand();
  double total = 0.0;
  for (double v : x) total += v;
  if (std::abs(total - optimal_partition(game).total) > tol) return false;
  for (Coalition c = 1; c <= grand; ++c) {
    double share = 0.0;
    for (int i : members_of(c)) share += x[i];
    if (share < game.value(c) - tol) return false;
  }
  return true;
}

}  // namespace gte
