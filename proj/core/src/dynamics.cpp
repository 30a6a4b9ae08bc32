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

#include "gte/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gte/game_ops.hpp"
#include "gte/rng.hpp"

namespace gte {

namespace {

std::vector<double> profile_values(const PureProfile& s) {
  return std::vector<double>(s.begin(), s.end());
}

std::vector<double> flatten(const ContinuousGame::Profile& s) {
  std::vector<double> out;
  for (const auto& a : s) out.insert(out.end(), a.begin(), a.end());
  return out;
}

std::vector<double> pure_utilities(const FiniteGame& game, const PureProfile& s) {
  std::vector<double> u(game.num_players());
  for (int k = 0; k < game.num_players(); ++k) u[k] = game.payoff(k, s);
  return u;
}

std::vector<double> continuous_utilities(const ContinuousGame& game,
                                         const ContinuousGame::Profile& s) {
  std::vector<double> u(game.num_players);
  for (int k = 0; k < game.num_players; ++k) u[k] = game.utility(k, s);
  return u;
}

int pick_uniform(const std::vector<int>& actions, Rng& rng) {
  return actions[rng.next_below(actions.size())];
}

double sup_step(const ContinuousGame::Profile& a, const ContinuousGame::Profile& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t d = 0; d < a[k].size(); ++d) {
      m = std::max(m, std::abs(a[k][d] - b[k][d]));
    }
  }
  return m;
}

void check_brd_args(double eps, int max_iters, bool finite) {
  if (eps < 0.0) throw ValidationError("eps must be non-negative");
  if (finite && eps != 0.0) {
    throw ValidationError("finite-game best-response dynamics require eps = 0");
  }
  if (max_iters <= 0) throw ValidationError("max_iters must be positive");
}

// Best response of `player` to the penalized objective
// u_k(a, s_{-k}) - kappa * (a - prev)^2 over action indices; uniform tie-break.
int penalized_best_response(const FiniteGame& game, const PureProfile& s,
                            int player, double kappa, int prev, Rng& rng) {
  PureProfile trial = s;
  const int n = game.action_count(player);
  std::vector<double> vals(n);
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a) {
    trial[player] = a;
    const double d = static_cast<double>(a - prev);
    vals[a] = game.payoff(player, trial) - kappa * d * d;
    best = std::max(best, vals[a]);
  }
  std::vector<int> argmax;
  for (int a = 0; a < n; ++a) {
    if (vals[a] >= best - kDefaultTol) argmax.push_back(a);
  }
  return pick_uniform(argmax, rng);
}

// Grid search with shrinking refinement for the penalized continuous
// objective; the previous action is always a candidate so large kappa
// yields an exact fixed point.
std::vector<double> penalized_best_response(const ContinuousGame& game,
                                            const ContinuousGame::Profile& s,
                                            int player, double kappa,
                                            const std::vector<double>& prev) {
  const int dims = game.action_dim(player);
  auto objective = [&](const std::vector<double>& a) {
    ContinuousGame::Profile trial = s;
    trial[player] = a;
    double pen = 0.0;
    for (int d = 0; d < dims; ++d) {
      pen += (a[d] - prev[d]) * (a[d] - prev[d]);
    }
    return game.utility(player, trial) - kappa * pen;
  };

  constexpr int kGrid = 33;
  std::vector<std::pair<double, double>> window = game.bounds[player];
  std::vector<double> best = prev;
  double best_val = objective(prev);
  for (int round = 0; round < 4; ++round) {
    std::vector<int> odo(dims, 0);
    std::vector<double> a(dims);
    for (;;) {
      for (int d = 0; d < dims; ++d) {
        a[d] = window[d].first +
               (window[d].second - window[d].first) * odo[d] / (kGrid - 1);
      }
      const double v = objective(a);
      if (v > best_val) {
        best_val = v;
        best = a;
      }
      int d = dims - 1;
      while (d >= 0 && ++odo[d] == kGrid) odo[d--] = 0;
      if (d < 0) break;
    }
    for (int d = 0; d < dims; ++d) {
      const double step = (window[d].second - window[d].first) / (kGrid - 1);
      window[d] = {std::max(game.bounds[player][d].first, best[d] - step),
                   std::min(game.bounds[player][d].second, best[d] + step)};
    }
  }
  return best;
}

}  // namespace

WeightSchedule WeightSchedule::finite_average(int horizon) {
  WeightSchedule s;
  s.kind = ScheduleKind::kFiniteAverage;
  s.horizon = horizon;
  s.validate();
  return s;
}

WeightSchedule WeightSchedule::discounted(double delta) {
  WeightSchedule s;
  s.kind = ScheduleKind::kDiscounted;
  s.discount = delta;
  s.validate();
  return s;
}

WeightSchedule WeightSchedule::running_average() { return WeightSchedule{}; }

void WeightSchedule::validate() const {
  switch (kind) {
    case ScheduleKind::kFiniteAverage:
      if (horizon <= 0) throw ValidationError("finite-average horizon must be positive");
      break;
    case ScheduleKind::kDiscounted:
      if (!(discount >= 0.0 && discount < 1.0)) {
        throw ValidationError("discount must lie in [0, 1)");
      }
      break;
    case ScheduleKind::kRunningAverage:
      break;
  }
}

double WeightSchedule::weight(int t, int T) const {
  switch (kind) {
    case ScheduleKind::kFiniteAverage:
      return 1.0 / horizon;
    case ScheduleKind::kDiscounted:
      return (1.0 - discount) * std::pow(discount, t - 1);
    case ScheduleKind::kRunningAverage:
      return 1.0 / T;
  }
  return 0.0;
}

void ConsensusNetwork::validate() const {
  if (num_nodes <= 0) throw ValidationError("consensus network needs nodes");
  if (static_cast<int>(neighbors.size()) != num_nodes ||
      static_cast<int>(weights.size()) != num_nodes) {
    throw ValidationError("neighbor and weight lists must cover every node");
  }
  for (int k = 0; k < num_nodes; ++k) {
    if (neighbors[k].size() != weights[k].size()) {
      throw ValidationError("weights are defined only on edges");
    }
    for (std::size_t e = 0; e < neighbors[k].size(); ++e) {
      const int j = neighbors[k][e];
      if (j < 0 || j >= num_nodes || j == k) {
        throw ValidationError("neighbor index out of range");
      }
      if (weights[k][e] < 0.0 || !std::isfinite(weights[k][e])) {
        throw ValidationError("edge weights must be non-negative");
      }
    }
  }
}

LearningTrace brd_sequential(const FiniteGame& game, const PureProfile& init,
                             double eps, int max_iters, std::uint64_t seed) {
  game.validate_profile(init);
  check_brd_args(eps, max_iters, true);
  Rng rng(seed);

  LearningTrace trace;
  trace.algorithm = "brd-seq";
  trace.seed = seed;

  PureProfile s = init;
  for (int round = 0; round < max_iters; ++round) {
    bool changed = false;
    for (int k = 0; k < game.num_players(); ++k) {
      const int a = pick_uniform(best_response_set(game, s, k), rng);
      if (a != s[k]) changed = true;
      s[k] = a;
    }
    trace.records.push_back({profile_values(s), pure_utilities(game, s)});
    ++trace.iterations;
    if (!changed) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

LearningTrace brd_sequential(const ContinuousGame& game,
                             const ContinuousGame::Profile& init, double eps,
                             int max_iters, std::uint64_t seed) {
  game.validate();
  game.validate_profile(init);
  check_brd_args(eps, max_iters, false);
  if (!game.best_response) {
    throw CapabilityError("continuous BRD requires a best-response oracle");
  }

  LearningTrace trace;
  trace.algorithm = "brd-seq";
  trace.seed = seed;

  ContinuousGame::Profile s = init;
  for (int round = 0; round < max_iters; ++round) {
    double step = 0.0;
    for (int k = 0; k < game.num_players; ++k) {
      std::vector<double> a = game.best_response(k, s);
      for (std::size_t d = 0; d < a.size(); ++d) {
        step = std::max(step, std::abs(a[d] - s[k][d]));
      }
      s[k] = std::move(a);
    }
    trace.records.push_back({flatten(s), continuous_utilities(game, s)});
    ++trace.iterations;
    if (step <= eps) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

LearningTrace brd_simultaneous(const FiniteGame& game, const PureProfile& init,
                               double eps, int max_iters, double kappa,
                               std::uint64_t seed) {
  game.validate_profile(init);
  check_brd_args(eps, max_iters, true);
  if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
  Rng rng(seed);

  LearningTrace trace;
  trace.algorithm = "brd-sim";
  trace.seed = seed;

  PureProfile s = init;
  for (int round = 0; round < max_iters; ++round) {
    PureProfile next(game.num_players());
    for (int k = 0; k < game.num_players(); ++k) {
      next[k] = kappa > 0.0
                    ? penalized_best_response(game, s, k, kappa, s[k], rng)
                    : pick_uniform(best_response_set(game, s, k), rng);
    }
    const bool changed = next != s;
    s = std::move(next);
    trace.records.push_back({profile_values(s), pure_utilities(game, s)});
    ++trace.iterations;
    if (!changed) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

LearningTrace brd_simultaneous(const ContinuousGame& game,
                               const ContinuousGame::Profile& init, double eps,
                               int max_iters, double kappa, std::uint64_t seed) {
  game.validate();
  game.validate_profile(init);
  check_brd_args(eps, max_iters, false);
  if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
  if (kappa == 0.0 && !game.best_response) {
    throw CapabilityError("continuous BRD requires a best-response oracle");
  }

  LearningTrace trace;
  trace.algorithm = "brd-sim";
  trace.seed = seed;

  ContinuousGame::Profile s = init;
  for (int round = 0; round < max_iters; ++round) {
    ContinuousGame::Profile next(game.num_players);
    for (int k = 0; k < game.num_players; ++k) {
      next[k] = kappa > 0.0 ? penalized_best_response(game, s, k, kappa, s[k])
                            : game.best_response(k, s);
    }
    const double step = sup_step(next, s);
    s = std::move(next);
    trace.records.push_back({flatten(s), continuous_utilities(game, s)});
    ++trace.iterations;
    if (step <= eps) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

LearningTrace fictitious_play(const FiniteGame& game, const PureProfile& init,
                              int T, std::uint64_t seed) {
  game.validate_profile(init);
  if (T <= 0) throw ValidationError("horizon must be positive");

  LearningTrace trace;
  trace.algorithm = "fp";
  trace.seed = seed;

  const int K = game.num_players();
  std::vector<std::vector<double>> freq(K);
  for (int k = 0; k < K; ++k) {
    freq[k].assign(game.action_count(k), 0.0);
    freq[k][init[k]] = 1.0;
  }

  PureProfile s = init;
  trace.records.push_back({profile_values(s), pure_utilities(game, s)});
  for (int t = 1; t < T; ++t) {
    PureProfile next(K);
    const MixedProfile beliefs(freq);
    for (int k = 0; k < K; ++k) {
      int best_a = 0;
      double best_u = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < game.action_count(k); ++a) {
        const double u = expected_utility_vs(game, beliefs, k, a);
        if (u > best_u + kDefaultTol) {
          best_u = u;
          best_a = a;
        }
      }
      next[k] = best_a;
    }
    s = std::move(next);
    // f(t+1) = f(t) + (e_a - f(t)) / (t+1)
    const double lambda = 1.0 / (t + 1);
    for (int k = 0; k < K; ++k) {
      for (double& f : freq[k]) f -= lambda * f;
      freq[k][s[k]] += lambda;
    }
    trace.records.push_back({profile_values(s), pure_utilities(game, s)});
  }
  trace.iterations = T;
  trace.final_policies = std::move(freq);

  // Converged when play was constant over the tail of the run.
  const int tail = std::min(T, 100);
  trace.converged = true;
  for (int t = T - tail; t < T; ++t) {
    if (trace.records[t].values != trace.records[T - 1].values) {
      trace.converged = false;
      break;
    }
  }
  return trace;
}

LearningTrace bush_mosteller(const FiniteGame& game, const MixedProfile& init,
                             double lambda, int T, std::uint64_t seed) {
  init.validate_for(game);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw ValidationError("lambda must lie in (0, 1)");
  }
  if (T <= 0) throw ValidationError("horizon must be positive");
  const std::uint64_t n = game.profile_count();
  for (int k = 0; k < game.num_players(); ++k) {
    for (std::uint64_t f = 0; f < n; ++f) {
      const double u = game.payoff_flat(k, f);
      if (u < 0.0 || u > 1.0) {
        throw ValidationError(
            "Bush-Mosteller requires utilities in [0, 1]; "
            "use normalize_utilities first");
      }
    }
  }

  Rng rng(seed);
  LearningTrace trace;
  trace.algorithm = "rl";
  trace.seed = seed;

  const int K = game.num_players();
  std::vector<std::vector<double>> pi = init.probs();
  PureProfile s(K);
  for (int t = 0; t < T; ++t) {
    for (int k = 0; k < K; ++k) {
      s[k] = static_cast<int>(rng.next_weighted(pi[k]));
    }
    const std::vector<double> u = pure_utilities(game, s);
    for (int k = 0; k < K; ++k) {
      const double step = lambda * u[k];
      for (int a = 0; a < game.action_count(k); ++a) {
        pi[k][a] += a == s[k] ? step * (1.0 - pi[k][a]) : -step * pi[k][a];
      }
      double total = 0.0;
      for (double p : pi[k]) {
        if (p < -kDefaultTol) throw NumericalError("policy left the simplex");
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-6) {
        throw NumericalError("policy left the simplex");
      }
    }
    trace.records.push_back({profile_values(s), u});
  }
  trace.iterations = T;
  trace.final_policies = std::move(pi);
  trace.converged = true;
  return trace;
}

LearningTrace regret_matching(const FiniteGame& game, int T, std::uint64_t seed) {
  if (T <= 0) throw ValidationError("horizon must be positive");
  const std::uint64_t n = game.profile_count();
  if (!game.is_dense()) {
    throw CapabilityError("regret matching needs the full payoff tensor");
  }

  Rng rng(seed);
  LearningTrace trace;
  trace.algorithm = "rm";
  trace.seed = seed;

  const int K = game.num_players();
  std::vector<std::vector<double>> regret(K);
  for (int k = 0; k < K; ++k) regret[k].assign(game.action_count(k), 0.0);
  std::vector<double> joint_counts(n, 0.0);

  PureProfile s(K);
  for (int t = 0; t < T; ++t) {
    for (int k = 0; k < K; ++k) {
      std::vector<double> pos(regret[k].size(), 0.0);
      double total = 0.0;
      for (std::size_t a = 0; a < pos.size(); ++a) {
        pos[a] = std::max(0.0, regret[k][a]);
        total += pos[a];
      }
      if (total <= 0.0) {
        s[k] = static_cast<int>(rng.next_below(pos.size()));
      } else {
        s[k] = static_cast<int>(rng.next_weighted(pos));
      }
    }
    const std::vector<double> u = pure_utilities(game, s);
    joint_counts[game.flat_index(s)] += 1.0;
    PureProfile trial = s;
    for (int k = 0; k < K; ++k) {
      for (int a = 0; a < game.action_count(k); ++a) {
        trial[k] = a;
        regret[k][a] += game.payoff(k, trial) - u[k];
      }
      trial[k] = s[k];
    }
    trace.records.push_back({profile_values(s), u});
  }
  trace.iterations = T;
  for (double& c : joint_counts) c /= T;
  trace.empirical_joint = JointDistribution(std::move(joint_counts));
  // Average positive-part regrets; play at the end follows their ratio.
  trace.final_policies.resize(K);
  for (int k = 0; k < K; ++k) {
    trace.final_policies[k].resize(regret[k].size());
    for (std::size_t a = 0; a < regret[k].size(); ++a) {
      trace.final_policies[k][a] = regret[k][a] / T;
    }
  }
  trace.converged = true;
  return trace;
}

LearningTrace consensus(const ConsensusNetwork& network,
                        const std::vector<double>& init, double eps,
                        int max_iters) {
  network.validate();
  if (static_cast<int>(init.size()) != network.num_nodes) {
    throw ValidationError("one initial state per node required");
  }
  if (eps < 0.0) throw ValidationError("eps must be non-negative");
  if (max_iters <= 0) throw ValidationError("max_iters must be positive");

  LearningTrace trace;
  trace.algorithm = "consensus";

  std::vector<double> state = init;
  auto update = [&](const std::vector<double>& cur) {
    std::vector<double> next = cur;
    for (int k = 0; k < network.num_nodes; ++k) {
      for (std::size_t e = 0; e < network.neighbors[k].size(); ++e) {
        next[k] += network.weights[k][e] * (cur[network.neighbors[k][e]] - cur[k]);
      }
    }
    return next;
  };
  auto max_change = [](const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
  };

  // Fixed points converge at t = 0 with an empty trace.
  if (max_change(update(state), state) <= eps) {
    trace.converged = true;
    return trace;
  }
  for (int t = 0; t < max_iters; ++t) {
    std::vector<double> next = update(state);
    const double step = max_change(next, state);
    state = std::move(next);
    trace.records.push_back({state, {}});
    ++trace.iterations;
    if (step <= eps) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

RepeatedGameResult repeated_game_run(const FiniteGame& stage,
                                     const std::vector<HistoryStrategy>& strategies,
                                     const WeightSchedule& schedule, int T) {
  schedule.validate();
  if (T <= 0) throw ValidationError("horizon must be positive");
  if (static_cast<int>(strategies.size()) != stage.num_players()) {
    throw ValidationError("one strategy per player required");
  }
  if (schedule.kind == ScheduleKind::kFiniteAverage && schedule.horizon != T) {
    throw ValidationError("schedule horizon does not match the run length");
  }

  RepeatedGameResult out;
  out.long_run_utilities.assign(stage.num_players(), 0.0);
  out.history.reserve(T);
  for (int t = 1; t <= T; ++t) {
    PureProfile s(stage.num_players());
    for (int k = 0; k < stage.num_players(); ++k) {
      s[k] = strategies[k](out.history);
    }
    stage.validate_profile(s);
    const double theta = schedule.weight(t, T);
    for (int k = 0; k < stage.num_players(); ++k) {
      out.long_run_utilities[k] += theta * stage.payoff(k, s);
    }
    out.history.push_back(std::move(s));
  }
  return out;
}

FiniteGame normalize_utilities(const FiniteGame& game) {
  const std::uint64_t n = game.profile_count();
  if (!game.is_dense()) {
    throw CapabilityError("normalization needs the full payoff tensor");
  }
  std::vector<double> payoffs = game.dense_payoffs();
  for (int k = 0; k < game.num_players(); ++k) {
    double lo = payoffs[k * n];
    double hi = lo;
    for (std::uint64_t f = 0; f < n; ++f) {
      lo = std::min(lo, payoffs[k * n + f]);
      hi = std::max(hi, payoffs[k * n + f]);
    }
    const double range = hi - lo;
    for (std::uint64_t f = 0; f < n; ++f) {
      double& u = payoffs[k * n + f];
      u = range > 0.0 ? (u - lo) / range : 0.0;
    }
  }
  FiniteGame out(game.action_counts(), std::move(payoffs));
  out.action_labels = game.action_labels;
  out.player_labels = game.player_labels;
  return out;
}

}  // namespace gte
