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

#ifndef GTE_SOLVERS_HPP_
#define GTE_SOLVERS_HPP_

#include <vector>

#include "gte/finite_game.hpp"
#include "gte/lp.hpp"

namespace gte {

/// All pure NE in lexicographic order; may be empty.
std::vector<PureProfile> enumerate_pure_ne(const FiniteGame& game);

/// Closed-form solution for 2-player 2-action games: pure NE plus the
/// interior best-response intersection point when it lies in (0,1)^2.
std::vector<MixedProfile> mixed_ne_2x2(const FiniteGame& game);

/// Equal-size support enumeration for 2-player games (N_k <= 8). Candidate
/// solutions of the indifference systems are kept only when they are valid
/// simplices and pass is_mixed_ne; duplicates within 1e-6 removed.
std::vector<MixedProfile> support_enumeration_2p(const FiniteGame& game,
                                                 int max_support = 8);

struct ZeroSumSolution {
  double value = 0.0;       // security level of player 1
  MixedProfile strategies;  // optimal maximin/minimax pair
};

/// Maximin LP for two-player zero-sum games. The game may be an affine
/// transform of a zero-sum game (u_2 = -alpha*u_1 + beta, alpha > 0); the
/// reported value refers to player 1's own utility.
ZeroSumSolution zero_sum_value(const FiniteGame& game);

enum class EquilibriumConcept { kCorrelated, kCoarseCorrelated };

struct EquilibriumOptimum {
  JointDistribution q;
  std::vector<double> expected_utilities;
  double objective = 0.0;  // weighted welfare
};

/// LP maximizing sum_k w_k E_q[u_k] over the CE (or CCE) polytope.
EquilibriumOptimum optimize_over_equilibrium_set(const FiniteGame& game,
                                                 const std::vector<double>& weights,
                                                 EquilibriumConcept kind);

struct NashBargainingResult {
  std::vector<double> argument;     // flattened action coordinates
  std::vector<double> utilities;    // one per player
  std::vector<double> status_quo;
  double nash_product = 0.0;
};

/// Grid search with shrinking-grid refinement (3 rounds) for the maximizer
/// of prod_k (u_k - lambda_k) over points dominating the status quo.
NashBargainingResult nash_bargaining(const ContinuousGame& game,
                                     const std::vector<double>& status_quo,
                                     int grid_per_axis);

/// Pure-profile enumeration variant for finite games.
NashBargainingResult nash_bargaining(const FiniteGame& game,
                                     const std::vector<double>& status_quo);

}  // namespace gte

#endif  // GTE_SOLVERS_HPP_
