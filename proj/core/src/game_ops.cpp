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

#include "gte/game_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gte/rng.hpp"

namespace gte {

namespace {

double profile_weight(const MixedProfile& mixed, const PureProfile& s,
                      int skip_player) {
  double w = 1.0;
  for (int k = 0; k < mixed.num_players(); ++k) {
    if (k == skip_player) continue;
    w *= mixed.player(k)[s[k]];
  }
  return w;
}

double welfare_at(const FiniteGame& game, std::uint64_t flat) {
  double w = 0.0;
  for (int k = 0; k < game.num_players(); ++k) w += game.payoff_flat(k, flat);
  return w;
}

}  // namespace

double expected_utility(const FiniteGame& game, const MixedProfile& profile,
                        int player) {
  profile.validate_for(game);
  const std::uint64_t n = game.profile_count();
  double eu = 0.0;
  for (std::uint64_t f = 0; f < n; ++f) {
    const PureProfile s = game.unflatten(f);
    const double w = profile_weight(profile, s, /*skip_player=*/-1);
    if (w != 0.0) eu += w * game.payoff_flat(player, f);
  }
  return eu;
}

double expected_utility_vs(const FiniteGame& game, const MixedProfile& profile,
                           int player, int action) {
  profile.validate_for(game);
  const std::uint64_t n = game.profile_count();
  double eu = 0.0;
  for (std::uint64_t f = 0; f < n; ++f) {
    PureProfile s = game.unflatten(f);
    if (s[player] != action) continue;
    const double w = profile_weight(profile, s, player);
    if (w != 0.0) eu += w * game.payoff_flat(player, f);
  }
  return eu;
}

std::vector<int> best_response_set(const FiniteGame& game,
                                   const PureProfile& profile, int player) {
  game.validate_profile(profile);
  PureProfile s = profile;
  std::vector<double> utilities(game.action_count(player));
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < game.action_count(player); ++a) {
    s[player] = a;
    utilities[a] = game.payoff(player, s);
    best = std::max(best, utilities[a]);
  }
  std::vector<int> argmax;
  for (int a = 0; a < game.action_count(player); ++a) {
    if (utilities[a] >= best - kDefaultTol) argmax.push_back(a);
  }
  return argmax;
}

bool is_pure_ne(const FiniteGame& game, const PureProfile& profile) {
  game.validate_profile(profile);
  PureProfile s = profile;
  for (int k = 0; k < game.num_players(); ++k) {
    const double here = game.payoff(k, profile);
    for (int a = 0; a < game.action_count(k); ++a) {
      s[k] = a;
      if (game.payoff(k, s) > here + kDefaultTol) return false;
    }
    s[k] = profile[k];
  }
  return true;
}

bool is_mixed_ne(const FiniteGame& game, const MixedProfile& profile, double tol) {
  if (tol <= 0.0) throw ValidationError("tolerance must be positive");
  profile.validate_for(game);
  for (int k = 0; k < game.num_players(); ++k) {
    const double eu = expected_utility(game, profile, k);
    for (int a = 0; a < game.action_count(k); ++a) {
      if (expected_utility_vs(game, profile, k, a) > eu + tol) return false;
    }
  }
  return true;
}

bool is_pareto_optimal(const FiniteGame& game, const PureProfile& profile,
                       bool weak) {
  game.validate_profile(profile);
  const int K = game.num_players();
  std::vector<double> base(K);
  for (int k = 0; k < K; ++k) base[k] = game.payoff(k, profile);

  const std::uint64_t n = game.profile_count();
  for (std::uint64_t f = 0; f < n; ++f) {
    bool all_geq = true, all_gt = true, any_gt = false;
    for (int k = 0; k < K; ++k) {
      const double u = game.payoff_flat(k, f);
      if (u < base[k]) all_geq = false;
      if (u <= base[k]) all_gt = false;
      if (u > base[k]) any_gt = true;
    }
    if (weak ? all_gt : (all_geq && any_gt)) return false;
  }
  return true;
}

SocialOptimum social_optimum(const FiniteGame& game) {
  const std::uint64_t n = game.profile_count();
  SocialOptimum best;
  best.welfare = -std::numeric_limits<double>::infinity();
  for (std::uint64_t f = 0; f < n; ++f) {
    const double w = welfare_at(game, f);
    if (w > best.welfare) {  // first strict improvement keeps lexicographic ties
      best.welfare = w;
      best.profile = game.unflatten(f);
    }
  }
  return best;
}

double price_of_anarchy(const FiniteGame& game,
                        const std::vector<PureProfile>& ne_set) {
  if (ne_set.empty()) throw ValidationError("price of anarchy needs a non-empty NE set");
  double worst_ne = std::numeric_limits<double>::infinity();
  for (const auto& ne : ne_set) {
    if (!is_pure_ne(game, ne)) {
      throw ValidationError("profile in ne_set is not a pure NE");
    }
    worst_ne = std::min(worst_ne, welfare_at(game, game.flat_index(ne)));
  }
  const double best = social_optimum(game).welfare;
  if (worst_ne <= 0.0) {
    if (best > 0.0) return std::numeric_limits<double>::infinity();
    throw ValidationError("price of anarchy undefined: both welfare values <= 0");
  }
  return best / worst_ne;
}

bool is_correlated_equilibrium(const FiniteGame& game, const JointDistribution& q,
                               double tol) {
  q.validate_for(game);
  const std::uint64_t n = game.profile_count();
  for (int k = 0; k < game.num_players(); ++k) {
    const int nk = game.action_count(k);
    // lhs[a][a'] = sum over profiles with s_k = a of q(s) * u_k(a', s_-k)
    std::vector<std::vector<double>> gain(nk, std::vector<double>(nk, 0.0));
    for (std::uint64_t f = 0; f < n; ++f) {
      if (q[f] == 0.0) continue;
      PureProfile s = game.unflatten(f);
      const int a = s[k];
      for (int alt = 0; alt < nk; ++alt) {
        s[k] = alt;
        gain[a][alt] += q[f] * game.payoff(k, s);
      }
    }
    for (int a = 0; a < nk; ++a) {
      for (int alt = 0; alt < nk; ++alt) {
        if (alt == a) continue;
        if (gain[a][a] < gain[a][alt] - tol) return false;
      }
    }
  }
  return true;
}

bool is_coarse_correlated_equilibrium(const FiniteGame& game,
                                      const JointDistribution& q, double tol) {
  q.validate_for(game);
  const std::uint64_t n = game.profile_count();
  for (int k = 0; k < game.num_players(); ++k) {
    const int nk = game.action_count(k);
    double on_path = 0.0;
    std::vector<double> deviate(nk, 0.0);
    for (std::uint64_t f = 0; f < n; ++f) {
      if (q[f] == 0.0) continue;
      PureProfile s = game.unflatten(f);
      on_path += q[f] * game.payoff_flat(k, f);
      const int a = s[k];
      for (int alt = 0; alt < nk; ++alt) {
        s[k] = alt;
        deviate[alt] += q[f] * game.payoff(k, s);
      }
      s[k] = a;
    }
    for (int alt = 0; alt < nk; ++alt) {
      if (on_path < deviate[alt] - tol) return false;
    }
  }
  return true;
}

std::optional<PotentialCertificate> find_exact_potential(const FiniteGame& game,
                                                         double tol) {
  const std::uint64_t n = game.profile_count();
  const int K = game.num_players();
  std::vector<double> phi(n, 0.0);

  // Integrate along the coordinate path (0,..,0) -> (a_0,0,..) -> ... -> a.
  for (std::uint64_t f = 0; f < n; ++f) {
    const PureProfile target = game.unflatten(f);
    PureProfile cur(K, 0);
    double value = 0.0;
    for (int k = 0; k < K; ++k) {
      const double before = game.payoff(k, cur);
      cur[k] = target[k];
      value += game.payoff(k, cur) - before;
    }
    phi[f] = value;
  }

  // Verify the defining identity on every unilateral edge.
  for (std::uint64_t f = 0; f < n; ++f) {
    PureProfile s = game.unflatten(f);
    for (int k = 0; k < K; ++k) {
      const int a = s[k];
      const double u_here = game.payoff_flat(k, f);
      for (int alt = a + 1; alt < game.action_count(k); ++alt) {
        s[k] = alt;
        const std::uint64_t g = game.flat_index(s);
        const double du = game.payoff_flat(k, g) - u_here;
        const double dphi = phi[g] - phi[f];
        if (std::abs(du - dphi) > tol) return std::nullopt;
      }
      s[k] = a;
    }
  }
  return PotentialCertificate{std::move(phi)};
}

bool is_supermodular(const FiniteGame& game) {
  // Increasing differences over the component-wise order. Adjacent steps in
  // own action and in a single opponent coordinate suffice: general
  // differences telescope into sums of these.
  const std::uint64_t n = game.profile_count();
  const int K = game.num_players();
  for (std::uint64_t f = 0; f < n; ++f) {
    PureProfile s = game.unflatten(f);
    for (int k = 0; k < K; ++k) {
      if (s[k] + 1 >= game.action_count(k)) continue;
      for (int j = 0; j < K; ++j) {
        if (j == k || s[j] + 1 >= game.action_count(j)) continue;
        PureProfile lo = s;
        const double d_low = [&] {
          PureProfile up = lo;
          up[k] += 1;
          return game.payoff(k, up) - game.payoff(k, lo);
        }();
        lo[j] += 1;
        const double d_high = [&] {
          PureProfile up = lo;
          up[k] += 1;
          return game.payoff(k, up) - game.payoff(k, lo);
        }();
        if (d_high < d_low - kDefaultTol) return false;
      }
    }
  }
  return true;
}

DscResult check_dsc(const ContinuousGame& game, const std::vector<double>& r,
                    int samples, std::uint64_t seed) {
  game.validate();
  if (!game.gradient) throw CapabilityError("DSC check needs a gradient evaluator");
  if (static_cast<int>(r.size()) != game.num_players) {
    throw ValidationError("weight vector length must equal player count");
  }
  for (double w : r) {
    if (!(w > 0.0)) throw ValidationError("DSC weights must be strictly positive");
  }

  Rng rng(seed);
  auto draw = [&] {
    ContinuousGame::Profile s(game.num_players);
    for (int k = 0; k < game.num_players; ++k) {
      for (auto [lo, hi] : game.bounds[k]) s[k].push_back(rng.next_range(lo, hi));
    }
    return s;
  };
  auto gamma = [&](const ContinuousGame::Profile& s) {
    std::vector<double> g;
    for (int k = 0; k < game.num_players; ++k) {
      for (double d : game.gradient(k, s)) g.push_back(r[k] * d);
    }
    return g;
  };

  for (int it = 0; it < samples; ++it) {
    const auto s = draw();
    const auto sp = draw();
    const auto gs = gamma(s);
    const auto gsp = gamma(sp);
    double inner = 0.0, dist2 = 0.0;
    std::size_t idx = 0;
    for (int k = 0; k < game.num_players; ++k) {
      for (std::size_t d = 0; d < s[k].size(); ++d, ++idx) {
        const double diff = s[k][d] - sp[k][d];
        inner += diff * (gsp[idx] - gs[idx]);
        dist2 += diff * diff;
      }
    }
    if (dist2 > 0.0 && inner <= 0.0) {
      return DscResult{false, std::make_pair(s, sp)};
    }
  }
  return DscResult{};
}

PureProfile sample_joint(const FiniteGame& game, const JointDistribution& q,
                         std::uint64_t seed) {
  q.validate_for(game);
  Rng rng(seed);
  const double u = rng.next_double();
  double acc = 0.0;
  const std::uint64_t n = q.size();
  for (std::uint64_t f = 0; f < n; ++f) {
    acc += q[f];
    if (u < acc) return game.unflatten(f);
  }
  return game.unflatten(n - 1);
}

}  // namespace gte
