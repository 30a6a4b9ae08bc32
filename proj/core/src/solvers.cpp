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

#include "gte/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "gte/game_ops.hpp"

namespace gte {

namespace {

constexpr double kVerifyTol = 1e-6;

// Gaussian elimination with partial pivoting; nullopt when singular.
std::optional<std::vector<double>> solve_dense(std::vector<std::vector<double>> a,
                                               std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-12) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return x;
}

void require_two_players(const FiniteGame& game) {
  if (game.num_players() != 2) {
    throw ValidationError("operation requires exactly two players");
  }
}

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool close_profiles(const MixedProfile& a, const MixedProfile& b, double tol) {
  for (int k = 0; k < a.num_players(); ++k) {
    for (std::size_t i = 0; i < a.player(k).size(); ++i) {
      if (std::abs(a.player(k)[i] - b.player(k)[i]) > tol) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<PureProfile> enumerate_pure_ne(const FiniteGame& game) {
  const std::uint64_t n = game.profile_count();
  std::vector<PureProfile> out;
  for (std::uint64_t f = 0; f < n; ++f) {
    PureProfile s = game.unflatten(f);
    if (is_pure_ne(game, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<MixedProfile> mixed_ne_2x2(const FiniteGame& game) {
  require_two_players(game);
  if (game.action_count(0) != 2 || game.action_count(1) != 2) {
    throw ValidationError("mixed_ne_2x2 requires two actions per player");
  }
  auto u = [&](int k, int a, int b) { return game.payoff(k, {a, b}); };

  std::vector<MixedProfile> out;
  for (const auto& ne : enumerate_pure_ne(game)) {
    out.push_back(MixedProfile::point_mass(game.action_counts(), ne));
  }

  // Interior indifference point of the best-response correspondences.
  const double d2 = u(1, 0, 0) - u(1, 1, 0) - u(1, 0, 1) + u(1, 1, 1);
  const double d1 = u(0, 0, 0) - u(0, 0, 1) - u(0, 1, 0) + u(0, 1, 1);
  if (std::abs(d1) > 1e-12 && std::abs(d2) > 1e-12) {
    const double p = (u(1, 1, 1) - u(1, 1, 0)) / d2;  // row's prob on action 0
    const double q = (u(0, 1, 1) - u(0, 0, 1)) / d1;  // column's prob on action 0
    if (p > 1e-12 && p < 1.0 - 1e-12 && q > 1e-12 && q < 1.0 - 1e-12) {
      MixedProfile interior({{p, 1.0 - p}, {q, 1.0 - q}});
      if (is_mixed_ne(game, interior, kVerifyTol)) out.push_back(std::move(interior));
    }
  }
  return out;
}

std::vector<MixedProfile> support_enumeration_2p(const FiniteGame& game,
                                                 int max_support) {
  require_two_players(game);
  const int n1 = game.action_count(0);
  const int n2 = game.action_count(1);
  if (n1 > 8 || n2 > 8) throw CapacityError("support enumeration capped at 8 actions");

  std::vector<MixedProfile> out;
  const int max_m = std::min({max_support, n1, n2});
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& s1 : subsets_of_size(n1, m)) {
      for (const auto& s2 : subsets_of_size(n2, m)) {
        // Player 2's mixing over s2 makes player 1 indifferent across s1
        // (and vice versa): m indifference rows plus the simplex row,
        // unknowns are the m probabilities and the common payoff level.
        auto build = [&](const std::vector<int>& own, const std::vector<int>& opp,
                         int who) -> std::optional<std::vector<double>> {
          std::vector<std::vector<double>> a(m + 1, std::vector<double>(m + 1, 0.0));
          std::vector<double> b(m + 1, 0.0);
          for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) {
              a[r][c] = who == 0 ? game.payoff(0, {own[r], opp[c]})
                                 : game.payoff(1, {opp[c], own[r]});
            }
            a[r][m] = -1.0;
          }
          for (int c = 0; c < m; ++c) a[m][c] = 1.0;
          b[m] = 1.0;
          return solve_dense(std::move(a), std::move(b));
        };

        const auto y = build(s1, s2, 0);  // player 2's probabilities
        const auto x = build(s2, s1, 1);  // player 1's probabilities
        if (!x || !y) continue;

        std::vector<double> p1(n1, 0.0), p2(n2, 0.0);
        bool ok = true;
        for (int i = 0; i < m; ++i) {
          if ((*x)[i] < -kVerifyTol || (*y)[i] < -kVerifyTol) ok = false;
          p1[s1[i]] = std::max(0.0, (*x)[i]);
          p2[s2[i]] = std::max(0.0, (*y)[i]);
        }
        if (!ok) continue;
        // Renormalize away the clipping residue.
        double sum1 = 0.0, sum2 = 0.0;
        for (double v : p1) sum1 += v;
        for (double v : p2) sum2 += v;
        if (sum1 <= 0.0 || sum2 <= 0.0) continue;
        for (double& v : p1) v /= sum1;
        for (double& v : p2) v /= sum2;

        MixedProfile candidate({p1, p2});
        if (!is_mixed_ne(game, candidate, kVerifyTol)) continue;
        bool dup = false;
        for (const auto& seen : out) {
          if (close_profiles(seen, candidate, 1e-6)) { dup = true; break; }
        }
        if (!dup) out.push_back(std::move(candidate));
      }
    }
  }
  return out;
}

ZeroSumSolution zero_sum_value(const FiniteGame& game) {
  require_two_players(game);
  const std::uint64_t n = game.profile_count();

  // Accept affine transforms of zero-sum: u_2 = -alpha*u_1 + beta, alpha > 0.
  double alpha = 1.0, beta = 0.0;
  {
    double u1_ref = game.payoff_flat(0, 0);
    std::uint64_t spread = 0;
    double best_gap = 0.0;
    for (std::uint64_t f = 1; f < n; ++f) {
      const double gap = std::abs(game.payoff_flat(0, f) - u1_ref);
      if (gap > best_gap) { best_gap = gap; spread = f; }
    }
    if (best_gap > 1e-12) {
      alpha = -(game.payoff_flat(1, spread) - game.payoff_flat(1, 0)) /
              (game.payoff_flat(0, spread) - u1_ref);
      if (!(alpha > 1e-12)) {
        throw ValidationError("game is not zero-sum after positive normalization");
      }
    }
    beta = game.payoff_flat(1, 0) + alpha * game.payoff_flat(0, 0);
    for (std::uint64_t f = 0; f < n; ++f) {
      if (std::abs(game.payoff_flat(1, f) + alpha * game.payoff_flat(0, f) - beta) >
          1e-9) {
        throw ValidationError("game is not zero-sum after positive normalization");
      }
    }
  }

  const int n1 = game.action_count(0);
  const int n2 = game.action_count(1);

  // Maximin for player 1: max v s.t. sum_i p_i u1(i,j) >= v, p in simplex.
  LinearProgram lp1;
  lp1.sense = LpSense::kMaximize;
  lp1.objective.assign(n1 + 1, 0.0);
  lp1.objective[n1] = 1.0;
  lp1.make_free(n1);
  for (int j = 0; j < n2; ++j) {
    std::vector<double> row(n1 + 1, 0.0);
    for (int i = 0; i < n1; ++i) row[i] = game.payoff(0, {i, j});
    row[n1] = -1.0;
    lp1.add_constraint(std::move(row), LpRelation::kGreaterEqual, 0.0);
  }
  {
    std::vector<double> simplex(n1 + 1, 1.0);
    simplex[n1] = 0.0;
    lp1.add_constraint(std::move(simplex), LpRelation::kEqual, 1.0);
  }
  const LpSolution sol1 = lp_solve(lp1);
  if (sol1.status != LpStatus::kOptimal) throw NumericalError("maximin LP failed");

  // Minimax over player 2's mixtures (still measured in player 1's utility).
  LinearProgram lp2;
  lp2.sense = LpSense::kMinimize;
  lp2.objective.assign(n2 + 1, 0.0);
  lp2.objective[n2] = 1.0;
  lp2.make_free(n2);
  for (int i = 0; i < n1; ++i) {
    std::vector<double> row(n2 + 1, 0.0);
    for (int j = 0; j < n2; ++j) row[j] = game.payoff(0, {i, j});
    row[n2] = -1.0;
    lp2.add_constraint(std::move(row), LpRelation::kLessEqual, 0.0);
  }
  {
    std::vector<double> simplex(n2 + 1, 1.0);
    simplex[n2] = 0.0;
    lp2.add_constraint(std::move(simplex), LpRelation::kEqual, 1.0);
  }
  const LpSolution sol2 = lp_solve(lp2);
  if (sol2.status != LpStatus::kOptimal) throw NumericalError("minimax LP failed");

  if (std::abs(sol1.value - sol2.value) > 1e-6) {
    throw NumericalError("security levels disagree beyond tolerance");
  }

  std::vector<double> p1(sol1.x.begin(), sol1.x.begin() + n1);
  std::vector<double> p2(sol2.x.begin(), sol2.x.begin() + n2);
  for (double& v : p1) v = std::max(0.0, v);
  for (double& v : p2) v = std::max(0.0, v);
  double s1 = 0.0, s2 = 0.0;
  for (double v : p1) s1 += v;
  for (double v : p2) s2 += v;
  for (double& v : p1) v /= s1;
  for (double& v : p2) v /= s2;

  return ZeroSumSolution{sol1.value, MixedProfile({p1, p2})};
}

EquilibriumOptimum optimize_over_equilibrium_set(const FiniteGame& game,
                                                 const std::vector<double>& weights,
                                                 EquilibriumConcept kind) {
  if (static_cast<int>(weights.size()) != game.num_players()) {
    throw ValidationError("one weight per player required");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) throw ValidationError("weights must be finite");
  }
  const std::uint64_t n = game.profile_count();
  const int K = game.num_players();

  LinearProgram lp;
  lp.sense = LpSense::kMaximize;
  lp.objective.assign(n, 0.0);
  for (std::uint64_t f = 0; f < n; ++f) {
    for (int k = 0; k < K; ++k) lp.objective[f] += weights[k] * game.payoff_flat(k, f);
  }
  lp.add_constraint(std::vector<double>(n, 1.0), LpRelation::kEqual, 1.0);

  for (int k = 0; k < K; ++k) {
    const int nk = game.action_count(k);
    if (kind == EquilibriumConcept::kCorrelated) {
      for (int a = 0; a < nk; ++a) {
        for (int alt = 0; alt < nk; ++alt) {
          if (alt == a) continue;
          std::vector<double> row(n, 0.0);
          for (std::uint64_t f = 0; f < n; ++f) {
            PureProfile s = game.unflatten(f);
            if (s[k] != a) continue;
            const double here = game.payoff_flat(k, f);
            s[k] = alt;
            row[f] = here - game.payoff(k, s);
          }
          lp.add_constraint(std::move(row), LpRelation::kGreaterEqual, 0.0);
        }
      }
    } else {
      for (int alt = 0; alt < nk; ++alt) {
        std::vector<double> row(n, 0.0);
        for (std::uint64_t f = 0; f < n; ++f) {
          PureProfile s = game.unflatten(f);
          const double here = game.payoff_flat(k, f);
          const int a = s[k];
          s[k] = alt;
          row[f] = here - game.payoff(k, s);
          s[k] = a;
        }
        lp.add_constraint(std::move(row), LpRelation::kGreaterEqual, 0.0);
      }
    }
  }

  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw NumericalError("equilibrium-set LP did not reach an optimum");
  }

  std::vector<double> q(sol.x);
  double total = 0.0;
  for (double& v : q) {
    v = std::max(0.0, v);
    total += v;
  }
  for (double& v : q) v /= total;

  EquilibriumOptimum out{JointDistribution(std::move(q)), {}, sol.value};
  out.expected_utilities.assign(K, 0.0);
  for (std::uint64_t f = 0; f < n; ++f) {
    for (int k = 0; k < K; ++k) {
      out.expected_utilities[k] += out.q[f] * game.payoff_flat(k, f);
    }
  }
  return out;
}

namespace {

struct BargainingPoint {
  std::vector<double> coords;
  std::vector<double> utilities;
  double product = 0.0;
  bool feasible = false;
};

double nash_product_of(const std::vector<double>& u, const std::vector<double>& sq,
                       bool* feasible) {
  double prod = 1.0;
  *feasible = true;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double gain = u[k] - sq[k];
    if (gain < -1e-9) {
      *feasible = false;
      return 0.0;
    }
    prod *= std::max(0.0, gain);
  }
  return prod;
}

}  // namespace

NashBargainingResult nash_bargaining(const ContinuousGame& game,
                                     const std::vector<double>& status_quo,
                                     int grid_per_axis) {
  game.validate();
  if (grid_per_axis < 2) throw ValidationError("grid resolution must be at least 2");
  if (static_cast<int>(status_quo.size()) != game.num_players) {
    throw ValidationError("one status-quo value per player required");
  }

  std::vector<std::pair<double, double>> box;
  for (const auto& player_box : game.bounds) {
    for (auto b : player_box) box.push_back(b);
  }
  const int dims = static_cast<int>(box.size());

  auto evaluate = [&](const std::vector<double>& coords) {
    ContinuousGame::Profile s(game.num_players);
    int idx = 0;
    for (int k = 0; k < game.num_players; ++k) {
      s[k].assign(coords.begin() + idx, coords.begin() + idx + game.action_dim(k));
      idx += game.action_dim(k);
    }
    std::vector<double> u(game.num_players);
    for (int k = 0; k < game.num_players; ++k) u[k] = game.utility(k, s);
    return u;
  };

  auto scan = [&](const std::vector<std::pair<double, double>>& window) {
    BargainingPoint best;
    std::vector<int> odo(dims, 0);
    std::vector<double> coords(dims);
    for (;;) {
      for (int d = 0; d < dims; ++d) {
        coords[d] = window[d].first + (window[d].second - window[d].first) *
                                          odo[d] / (grid_per_axis - 1);
      }
      const auto u = evaluate(coords);
      bool feasible = false;
      const double prod = nash_product_of(u, status_quo, &feasible);
      if (feasible && (!best.feasible || prod > best.product)) {
        best = {coords, u, prod, true};
      }
      int d = dims - 1;
      while (d >= 0 && ++odo[d] == grid_per_axis) odo[d--] = 0;
      if (d < 0) break;
    }
    return best;
  };

  BargainingPoint best = scan(box);
  if (!best.feasible) {
    throw ValidationError("no feasible point dominates the status quo");
  }

  // Shrinking-grid refinement around the incumbent cell.
  std::vector<std::pair<double, double>> window = box;
  for (int round = 0; round < 3; ++round) {
    std::vector<std::pair<double, double>> next(dims);
    for (int d = 0; d < dims; ++d) {
      const double step = (window[d].second - window[d].first) / (grid_per_axis - 1);
      next[d] = {std::max(box[d].first, best.coords[d] - step),
                 std::min(box[d].second, best.coords[d] + step)};
    }
    window = next;
    const BargainingPoint refined = scan(window);
    if (refined.feasible && refined.product >= best.product) best = refined;
  }

  return NashBargainingResult{best.coords, best.utilities, status_quo, best.product};
}

NashBargainingResult nash_bargaining(const FiniteGame& game,
                                     const std::vector<double>& status_quo) {
  if (static_cast<int>(status_quo.size()) != game.num_players()) {
    throw ValidationError("one status-quo value per player required");
  }
  const std::uint64_t n = game.profile_count();
  BargainingPoint best;
  for (std::uint64_t f = 0; f < n; ++f) {
    std::vector<double> u(game.num_players());
    for (int k = 0; k < game.num_players(); ++k) u[k] = game.payoff_flat(k, f);
    bool feasible = false;
    const double prod = nash_product_of(u, status_quo, &feasible);
    if (feasible && (!best.feasible || prod > best.product)) {
      const PureProfile s = game.unflatten(f);
      best = {std::vector<double>(s.begin(), s.end()), u, prod, true};
    }
  }
  if (!best.feasible) {
    throw ValidationError("no feasible point dominates the status quo");
  }
  return NashBargainingResult{best.coords, best.utilities, status_quo, best.product};
}

}  // namespace gte
