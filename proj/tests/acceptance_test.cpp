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

// End-to-end verification suite. Each check exercises a full feature path
// with frozen expected values and prints exactly one PASS/FAIL line; the
// binary exits non-zero when any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gte/coalition.hpp"
#include "gte/dynamics.hpp"
#include "gte/formation.hpp"
#include "gte/game_ops.hpp"
#include "gte/rng.hpp"
#include "gte/scenarios.hpp"
#include "gte/solvers.hpp"

using namespace gte;

namespace {

struct Check {
  int id;
  std::string summary;
  std::function<bool(std::ostringstream&)> fn;
};

#define REQUIRE_MSG(cond, msg)                  \
  do {                                          \
    if (!(cond)) {                              \
      why << msg;                               \
      return false;                             \
    }                                           \
  } while (0)

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---- 1. Dominant-strategy sensing dilemma, all cost levels -----------------

bool check_sensor_dilemma(std::ostringstream& why) {
  std::vector<double> costs = {0.01, 0.2, 0.5, 0.77, 0.99};
  Rng rng(101);
  for (int i = 0; i < 20; ++i) costs.push_back(rng.next_range(0.001, 0.999));
  for (double e : costs) {
    FiniteGame g = sensor_dilemma(e);
    std::vector<PureProfile> ne = enumerate_pure_ne(g);
    REQUIRE_MSG((ne.size() == 1 && ne[0] == PureProfile{0, 0}),
                "pure NE set wrong at e=" << e);
    std::vector<MixedProfile> mixed = mixed_ne_2x2(g);
    REQUIRE_MSG(mixed.size() == 1, "expected a single mixed NE at e=" << e);
    for (int k = 0; k < 2; ++k) {
      REQUIRE_MSG(mixed[0].player(k)[0] == 1.0 && mixed[0].player(k)[1] == 0.0,
                  "mixed NE not the exact point mass at e=" << e);
    }
  }
  return true;
}

// ---- 2. Spectrum-sharing dilemma efficiency loss ---------------------------

bool check_poa(std::ostringstream& why) {
  FiniteGame g = cr_dilemma();
  double poa = price_of_anarchy(g, enumerate_pure_ne(g));
  REQUIRE_MSG(near(poa, 3.0, 1e-12), "PoA = " << poa << ", want 3");
  return true;
}

// ---- 3. Coordination game: mixed NE payoffs and correlated optimum ---------

bool check_correlated(std::ostringstream& why) {
  FiniteGame g = aumann_coordination();
  bool found_interior = false;
  for (const MixedProfile& m : mixed_ne_2x2(g)) {
    if (m.player(0)[0] > 0.0 && m.player(0)[0] < 1.0) {
      found_interior = true;
      for (int k = 0; k < 2; ++k) {
        double u = expected_utility(g, m, k);
        REQUIRE_MSG(near(u, 2.5, 1e-9), "interior NE payoff " << u);
      }
    }
  }
  REQUIRE_MSG(found_interior, "no interior mixed NE found");

  EquilibriumOptimum opt = optimize_over_equilibrium_set(
      g, {1.0, 1.0}, EquilibriumConcept::kCorrelated);
  for (int k = 0; k < 2; ++k) {
    REQUIRE_MSG(near(opt.expected_utilities[k], 10.0 / 3, 1e-6),
                "CE optimum payoff " << opt.expected_utilities[k]);
  }

  // Payoff-region vertices (5,1), (1,5) and (5/2,5/2).
  std::vector<JointDistribution> vertices = {
      JointDistribution::point_mass(g, {0, 0}),
      JointDistribution::point_mass(g, {1, 1}),
      JointDistribution::product(g, MixedProfile({{0.5, 0.5}, {0.5, 0.5}}))};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    REQUIRE_MSG(is_correlated_equilibrium(g, vertices[i]),
                "vertex " << i << " rejected as a correlated equilibrium");
  }
  return true;
}

// ---- 4. Repeated dilemma under the trigger plan ----------------------------

bool check_repeated(std::ostringstream& why) {
  FiniteGame stage = cr_dilemma();
  HistoryStrategy trigger([](const std::vector<PureProfile>& h) {
    for (const PureProfile& a : h)
      if (a[0] != 1 || a[1] != 1) return 0;
    return 1;
  });
  HistoryStrategy defect([](const std::vector<PureProfile>&) { return 0; });

  RepeatedGameResult coop = repeated_game_run(
      stage, {trigger, trigger}, WeightSchedule::running_average(), 1000);
  for (double u : coop.long_run_utilities)
    REQUIRE_MSG(near(u, 3.0, 1e-9), "trigger utility " << u);

  RepeatedGameResult base = repeated_game_run(
      stage, {defect, defect}, WeightSchedule::running_average(), 1000);
  for (double u : base.long_run_utilities)
    REQUIRE_MSG(near(u, 1.0, 1e-9), "all-defect utility " << u);
  return true;
}

// ---- 5. Foraging congestion game: 22/11 split ------------------------------

bool check_foraging(std::ostringstream& why) {
  FiniteGame g = duck_foraging(33, 24.0, 12.0);
  PureProfile split(33, 0);
  for (int k = 22; k < 33; ++k) split[k] = 1;
  REQUIRE_MSG(is_pure_ne(g, split), "22/11 split is not an equilibrium");

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    LearningTrace t = brd_sequential(g, PureProfile(33, 0), 0.0, 200, seed);
    REQUIRE_MSG(t.converged, "seed " << seed << " did not converge");
    int slow = 0;
    for (double v : t.records.back().values) slow += (v == 1.0);
    REQUIRE_MSG(slow == 11, "seed " << seed << " ended with " << slow
                                    << " at the slow site");
  }
  return true;
}

// ---- 6. Shared-receiver band selection is an exact potential game ----------

bool check_potential_game(std::ostringstream& why) {
  for (int inst = 0; inst < 20; ++inst) {
    Rng rng(derive_seed(606, inst));
    int K = 2 + static_cast<int>(rng.next_below(3));
    int N = 2 + static_cast<int>(rng.next_below(3));
    std::vector<double> gains(static_cast<std::size_t>(K) * N);
    for (double& h : gains) h = rng.next_range(0.1, 2.0);
    InterferenceChannel ch = InterferenceChannel::mac(
        K, N, gains, rng.next_range(0.5, 1.5), rng.next_range(0.5, 2.0));
    FiniteGame g = bs_game(ch);

    auto cert = find_exact_potential(g);
    REQUIRE_MSG(cert.has_value(), "instance " << inst << ": no potential found");

    // Certificate equals the closed-form potential up to a constant.
    std::vector<std::vector<double>> powers(K, std::vector<double>(N, 0.0));
    auto phi_at = [&](const PureProfile& s) {
      for (int k = 0; k < K; ++k) {
        std::fill(powers[k].begin(), powers[k].end(), 0.0);
        powers[k][s[k]] = ch.budget;
      }
      return mac_potential(ch, powers);
    };
    double lo = 1e300, hi = -1e300;
    for (std::uint64_t f = 0; f < g.profile_count(); ++f) {
      double d = cert->values[f] - phi_at(g.unflatten(f));
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    REQUIRE_MSG(hi - lo <= 1e-9,
                "instance " << inst << ": constant-shift spread " << hi - lo);

    // Random start; the potential must never decrease along the trace.
    PureProfile init(K);
    for (int k = 0; k < K; ++k) init[k] = static_cast<int>(rng.next_below(N));
    LearningTrace t = brd_sequential(g, init, 0.0, 500, derive_seed(607, inst));
    REQUIRE_MSG(t.converged, "instance " << inst << ": dynamics diverged");
    double prev = phi_at(init);
    for (const TraceRecord& r : t.records) {
      PureProfile s(K);
      for (int k = 0; k < K; ++k) s[k] = static_cast<int>(r.values[k]);
      double phi = phi_at(s);
      REQUIRE_MSG(phi >= prev - 1e-12,
                  "instance " << inst << ": potential decreased");
      prev = phi;
    }
    PureProfile last(K);
    for (int k = 0; k < K; ++k)
      last[k] = static_cast<int>(t.records.back().values[k]);
    REQUIRE_MSG(is_pure_ne(g, last),
                "instance " << inst << ": converged profile not an NE");
  }
  return true;
}

// ---- 7. Water-filling budget and complementary slackness -------------------

bool check_waterfilling(std::ostringstream& why) {
  // Analytic two-band case: inverse channels (1, 2), unit budget.
  InterferenceChannel two = InterferenceChannel::mac(1, 2, {1.0, 0.5}, 1.0, 1.0);
  std::vector<double> exact = waterfilling_best_response(two, 0, {{0.0, 0.0}});
  REQUIRE_MSG(exact[0] == 1.0 && exact[1] == 0.0,
              "analytic case returned (" << exact[0] << "," << exact[1] << ")");

  for (int inst = 0; inst < 100; ++inst) {
    Rng rng(derive_seed(707, inst));
    int K = 1 + static_cast<int>(rng.next_below(4));
    int N = 1 + static_cast<int>(rng.next_below(6));
    std::vector<double> gains(static_cast<std::size_t>(K) * K * N);
    for (double& h : gains) h = rng.next_range(0.05, 2.0);
    double budget = rng.next_range(0.5, 3.0);
    InterferenceChannel ch = InterferenceChannel::interference(
        K, N, gains, rng.next_range(0.1, 1.0), budget);

    std::vector<std::vector<double>> others(K, std::vector<double>(N));
    for (int l = 0; l < K; ++l) {
      double total = 0.0;
      for (double& p : others[l]) {
        p = rng.next_double();
        total += p;
      }
      double scale = budget * rng.next_double() / total;
      for (double& p : others[l]) p *= scale;
    }

    std::vector<double> p = waterfilling_best_response(ch, 0, others);
    double total = 0.0;
    for (double v : p) total += v;
    REQUIRE_MSG(near(total, budget, 1e-10),
                "instance " << inst << ": budget " << total << " vs " << budget);

    std::vector<double> eff(N);
    for (int n = 0; n < N; ++n) {
      double interference = ch.noise;
      for (int l = 1; l < K; ++l)
        interference += ch.gain(l, 0, n) * others[l][n];
      eff[n] = interference / ch.gain(0, 0, n);
    }
    double level = -1e300;
    for (int n = 0; n < N; ++n)
      if (p[n] > 0.0) level = std::max(level, p[n] + eff[n]);
    for (int n = 0; n < N; ++n) {
      if (p[n] > 0.0) {
        REQUIRE_MSG(near(p[n] + eff[n], level, 1e-9),
                    "instance " << inst << ": uneven water level");
      } else {
        REQUIRE_MSG(eff[n] >= level - 1e-9,
                    "instance " << inst << ": idle band below the water level");
      }
    }
  }
  return true;
}

// ---- 8. Regret matching reaches the coarse correlated set ------------------

bool check_regret_matching(std::ostringstream& why) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, FiniteGame>> games;
  games.emplace_back("sensor", sensor_dilemma(0.2));
  games.emplace_back("cr", cr_dilemma());
  games.emplace_back("aumann", aumann_coordination());
  games.emplace_back("pennies",
                     FiniteGame({2, 2}, {1, -1, -1, 1, -1, 1, 1, -1}));
  for (auto& [name, g] : games) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      LearningTrace t = regret_matching(g, 100000, seed);
      REQUIRE_MSG(t.empirical_joint.has_value(),
                  name << " seed " << seed << ": no empirical joint");
      REQUIRE_MSG(
          is_coarse_correlated_equilibrium(g, *t.empirical_joint, 0.05),
          name << " seed " << seed << ": joint outside the 0.05 CCE set");
    }
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  REQUIRE_MSG(secs <= 30.0, "runtime " << secs << "s exceeds 30s");
  return true;
}

// ---- 9. Reinforcement learning absorbs at the dominant action --------------

bool check_reinforcement(std::ostringstream& why) {
  FiniteGame g = normalize_utilities(sensor_dilemma(0.2));
  MixedProfile init = MixedProfile::uniform({2, 2});
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    LearningTrace t;
    try {
      t = bush_mosteller(g, init, 0.1, 50000, seed);
    } catch (const std::exception& e) {
      why << "seed " << seed << " raised: " << e.what();
      return false;
    }
    if (t.final_policies[0][0] > 0.99 && t.final_policies[1][0] > 0.99) ++good;
  }
  REQUIRE_MSG(good >= 90, "only " << good << "/100 runs absorbed");
  return true;
}

// ---- 10. Shapley axioms and permutation brute force ------------------------

bool check_shapley(std::ostringstream& why) {
  TUGame majority = TUGame::from_evaluator(
      3, [](Coalition c) { return coalition_size(c) >= 2 ? 1.0 : 0.0; });
  for (double x : shapley(majority))
    REQUIRE_MSG(near(x, 1.0 / 3, 1e-9), "majority share " << x);

  for (int inst = 0; inst < 50; ++inst) {
    Rng rng(derive_seed(1010, inst));
    int K = 2 + static_cast<int>(rng.next_below(5));
    std::size_t cells = std::size_t{1} << K;
    std::vector<double> va(cells, 0.0), vb(cells, 0.0);
    for (std::size_t c = 1; c < cells; ++c) {
      va[c] = rng.next_range(-3.0, 6.0);
      vb[c] = rng.next_range(-3.0, 6.0);
    }
    TUGame a(K, va);
    Allocation pa = shapley(a);

    // Efficiency.
    double sum = 0.0;
    for (double x : pa) sum += x;
    REQUIRE_MSG(near(sum, a.value(a.grand()), 1e-9),
                "instance " << inst << ": efficiency broken");

    // Symmetry: symmetrize players 0 and 1 and compare their shares.
    std::vector<double> vs(cells);
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t swapped = (c & ~std::size_t{3}) | ((c & 1) << 1) | ((c >> 1) & 1);
      vs[c] = 0.5 * (va[c] + va[swapped]);
    }
    Allocation ps = shapley(TUGame(K, vs));
    REQUIRE_MSG(near(ps[0], ps[1], 1e-9),
                "instance " << inst << ": symmetry broken");

    // Dummy: append a player with zero marginal contributions.
    std::vector<double> vd(cells * 2);
    for (std::size_t c = 0; c < cells * 2; ++c) vd[c] = va[c & (cells - 1)];
    Allocation pd = shapley(TUGame(K + 1, vd));
    REQUIRE_MSG(near(pd[K], 0.0, 1e-9), "instance " << inst << ": dummy paid");

    // Additivity.
    std::vector<double> vsum(cells);
    for (std::size_t c = 0; c < cells; ++c) vsum[c] = va[c] + vb[c];
    Allocation pb = shapley(TUGame(K, vb));
    Allocation pab = shapley(TUGame(K, vsum));
    for (int i = 0; i < K; ++i)
      REQUIRE_MSG(near(pab[i], pa[i] + pb[i], 1e-9),
                  "instance " << inst << ": additivity broken");

    // All-orders brute force agrees with the subset formula.
    ShapleyMcResult brute = shapley_monte_carlo(a, 1, 1, /*exhaustive=*/true);
    for (int i = 0; i < K; ++i)
      REQUIRE_MSG(near(brute.value[i], pa[i], 1e-9),
                  "instance " << inst << ": brute force mismatch");
  }
  return true;
}

// ---- 11. Core geometry -----------------------------------------------------

bool check_core(std::ostringstream& why) {
  TUGame majority = TUGame::from_evaluator(
      3, [](Coalition c) { return coalition_size(c) >= 2 ? 1.0 : 0.0; });
  CoreResult core = core_solve(majority);
  REQUIRE_MSG(!core.nonempty, "majority core should be empty");
  REQUIRE_MSG(near(core.lp_value, 1.5, 1e-7), "LP value " << core.lp_value);
  LeastCoreResult least = least_epsilon_core(majority);
  REQUIRE_MSG(near(least.epsilon, 1.0 / 3, 1e-7),
              "least epsilon " << least.epsilon);

  for (int inst = 0; inst < 50; ++inst) {
    Rng rng(derive_seed(1111, inst));
    int K = 2 + static_cast<int>(rng.next_below(7));
    std::vector<double> w(K);
    for (double& x : w) x = rng.next_range(0.05, 2.0);
    TUGame g = TUGame::from_evaluator(K, [&](Coalition c) {
      double s = 0.0;
      for (int i = 0; i < K; ++i)
        if (c & (Coalition{1} << i)) s += w[i];
      return s * s;
    });
    CoreResult r = core_solve(g);
    REQUIRE_MSG(r.nonempty, "instance " << inst << ": convex core empty");
    REQUIRE_MSG(in_core(g, shapley(g), 1e-7),
                "instance " << inst << ": Shapley outside the core");
  }
  return true;
}

// ---- 12. Beamforming: selfish point vs bargaining --------------------------

bool check_beamforming(std::ostringstream& why) {
  const int kGrid = 41;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    BeamformingInstance inst = random_beamforming_instance(4, 1.0, seed);
    ContinuousGame g = beamforming_game(inst);

    std::vector<std::vector<double>> u1(kGrid, std::vector<double>(kGrid));
    std::vector<std::vector<double>> u2(kGrid, std::vector<double>(kGrid));
    for (int i = 0; i < kGrid; ++i) {
      for (int j = 0; j < kGrid; ++j) {
        ContinuousGame::Profile s = {{i / double(kGrid - 1)},
                                     {j / double(kGrid - 1)}};
        u1[i][j] = g.utility(0, s);
        u2[i][j] = g.utility(1, s);
      }
    }
    int ne_count = 0;
    bool origin_is_ne = false;
    for (int i = 0; i < kGrid; ++i) {
      for (int j = 0; j < kGrid; ++j) {
        bool ne = true;
        for (int d = 0; d < kGrid && ne; ++d) {
          if (u1[d][j] > u1[i][j] + 1e-12) ne = false;
          if (u2[i][d] > u2[i][j] + 1e-12) ne = false;
        }
        if (ne) {
          ++ne_count;
          if (i == 0 && j == 0) origin_is_ne = true;
        }
      }
    }
    REQUIRE_MSG(ne_count == 1 && origin_is_ne,
                "seed " << seed << ": grid NE not unique at the origin ("
                        << ne_count << " found)");

    std::vector<double> status_quo = {u1[0][0], u2[0][0]};
    NashBargainingResult nbs = nash_bargaining(g, status_quo, 33);
    bool strict = false;
    for (int k = 0; k < 2; ++k) {
      REQUIRE_MSG(nbs.utilities[k] >= status_quo[k] - 1e-9,
                  "seed " << seed << ": bargaining hurt player " << k);
      if (nbs.utilities[k] > status_quo[k] + 1e-9) strict = true;
    }
    REQUIRE_MSG(strict, "seed " << seed << ": no strict improvement");
  }
  return true;
}

// ---- 13. Merge-and-split on the detection network --------------------------

bool check_formation(std::ostringstream& why) {
  CTDNetwork net;
  net.num_stations = 7;
  net.detection = {0.70, 0.65, 0.60, 0.55, 0.50, 0.45, 0.40};
  net.false_alarm = std::vector<double>(7, 0.02);
  net.alpha = 0.05;
  TUGame game = TUGame::from_evaluator(7, [&net](Coalition c) {
    std::vector<int> members;
    for (int i = 0; i < 7; ++i)
      if (c & (Coalition{1} << i)) members.push_back(i);
    return ctd_value(net, members);
  });
  AllocationRule rule = AllocationRule::identity_ntu([&](Coalition c) {
    std::vector<int> members;
    for (int i = 0; i < 7; ++i)
      if (c & (Coalition{1} << i)) members.push_back(i);
    return std::vector<double>(members.size(), ctd_value(net, members));
  });

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FormationState s =
        merge_split_run(game, rule, Partition::singletons(7), 500, 2, seed);
    REQUIRE_MSG(s.converged && s.iterations <= 500,
                "seed " << seed << ": not converged in 500 operations");
    REQUIRE_MSG(is_merge_split_stable(s, game, rule).stable,
                "seed " << seed << ": final state unstable");

    // Replay the history: every applied operation must strictly improve all
    // of its participants.
    FormationState replay = make_formation_state(game, rule,
                                                 Partition::singletons(7));
    std::vector<double> pay = replay.payoffs;
    for (const FormationOp& op : s.history) {
      Coalition affected = 0;
      for (Coalition c : op.removed) affected |= c;
      std::vector<double> old_pay, new_pay;
      std::vector<double> updated(7, 0.0);
      for (Coalition c : op.added) {
        std::vector<double> alloc = rule.allocate(game, c);
        int idx = 0;
        for (int i = 0; i < 7; ++i)
          if (c & (Coalition{1} << i)) updated[i] = alloc[idx++];
      }
      for (int i = 0; i < 7; ++i) {
        if (affected & (Coalition{1} << i)) {
          old_pay.push_back(pay[i]);
          new_pay.push_back(updated[i]);
        }
      }
      REQUIRE_MSG(pareto_preferred(new_pay, old_pay),
                  "seed " << seed << ": an applied operation was not a "
                             "Pareto improvement");
      for (int i = 0; i < 7; ++i)
        if (affected & (Coalition{1} << i)) pay[i] = updated[i];
    }
  }
  return true;
}

// ---- 14. Cross-solver oracle on zero-sum games ------------------------------

bool check_zero_sum_cross(std::ostringstream& why) {
  for (int inst = 0; inst < 50; ++inst) {
    Rng rng(derive_seed(1414, inst));
    std::vector<double> u1(9);
    for (double& v : u1) v = rng.next_range(-5.0, 5.0);
    std::vector<double> payoffs = u1;
    for (double v : u1) payoffs.push_back(-v);
    FiniteGame g({3, 3}, payoffs);

    ZeroSumSolution lp = zero_sum_value(g);
    std::vector<MixedProfile> eqs = support_enumeration_2p(g);
    REQUIRE_MSG(!eqs.empty(), "instance " << inst << ": no NE enumerated");
    double v = expected_utility(g, eqs[0], 0);
    REQUIRE_MSG(near(v, lp.value, 1e-6),
                "instance " << inst << ": values " << v << " vs " << lp.value);
  }
  return true;
}

// ---- 15. Regret matching welfare on the two-band fixture -------------------

bool check_rm_welfare(std::ostringstream& why) {
  // 2 transmitters, 2 bands; each has a strongly preferred distinct band.
  InterferenceChannel ch = InterferenceChannel::interference(
      2, 2, {2.0, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 2.0}, 0.5, 1.0);
  FiniteGame g = bs_game(ch);
  std::vector<PureProfile> ne = enumerate_pure_ne(g);
  REQUIRE_MSG(!ne.empty(), "fixture has no pure NE");
  double worst = 1e300;
  for (const PureProfile& s : ne) {
    double w = g.payoff(0, s) + g.payoff(1, s);
    worst = std::min(worst, w);
  }

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    LearningTrace t = regret_matching(g, 100000, seed);
    REQUIRE_MSG(t.empirical_joint.has_value(), "seed " << seed << ": no joint");
    double welfare = 0.0;
    for (std::uint64_t f = 0; f < g.profile_count(); ++f) {
      welfare += (*t.empirical_joint)[f] *
                 (g.payoff_flat(0, f) + g.payoff_flat(1, f));
    }
    REQUIRE_MSG(welfare >= worst - 0.05,
                "seed " << seed << ": welfare " << welfare << " below "
                        << worst - 0.05);
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Check> checks = {
      {1, "sensing dilemma: unique equilibrium, exact, for all cost levels",
       check_sensor_dilemma},
      {2, "spectrum dilemma: price of anarchy equals 3", check_poa},
      {3, "coordination game: mixed payoffs, correlated optimum, hull vertices",
       check_correlated},
      {4, "repeated dilemma: trigger plan sustains cooperation",
       check_repeated},
      {5, "foraging game: 22/11 split reached by best-response dynamics",
       check_foraging},
      {6, "shared-receiver band selection is an exact potential game",
       check_potential_game},
      {7, "water-filling: budget and complementary slackness",
       check_waterfilling},
      {8, "regret matching lands in the coarse correlated set",
       check_regret_matching},
      {9, "reinforcement learning absorbs at the dominant action",
       check_reinforcement},
      {10, "Shapley value: axioms and permutation brute force", check_shapley},
      {11, "core: emptiness, least epsilon-core, convex games", check_core},
      {12, "beamforming: bargaining dominates the selfish point",
       check_beamforming},
      {13, "merge-and-split stabilizes the detection network",
       check_formation},
      {14, "zero-sum LP value matches support enumeration",
       check_zero_sum_cross},
      {15, "regret matching welfare on the two-band fixture",
       check_rm_welfare},
  };

  int failed = 0;
  for (const Check& c : checks) {
    std::ostringstream why;
    bool ok = false;
    try {
      ok = c.fn(why);
    } catch (const std::exception& e) {
      why << "unexpected exception: " << e.what();
    }
    if (ok) {
      std::printf("PASS %2d  %s\n", c.id, c.summary.c_str());
    } else {
      ++failed;
      std::printf("FAIL %2d  %s  [%s]\n", c.id, c.summary.c_str(),
                  why.str().c_str());
    }
  }
  if (failed != 0) std::printf("%d of 15 checks failed\n", failed);
  return failed == 0 ? 0 : 1;
}
