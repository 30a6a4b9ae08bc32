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

#include <benchmark/benchmark.h>

#include "gte/coalition.hpp"
#include "gte/dynamics.hpp"
#include "gte/game_ops.hpp"
#include "gte/scenarios.hpp"
#include "gte/solvers.hpp"

using namespace gte;

static void BM_EnumeratePureNe(benchmark::State& state) {
  FiniteGame g = duck_foraging(static_cast<int>(state.range(0)), 24.0, 12.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_pure_ne(g));
  }
}
BENCHMARK(BM_EnumeratePureNe)->Arg(8)->Arg(12)->Arg(16);

static void BM_SupportEnumeration(benchmark::State& state) {
  std::vector<double> u1 = {0, -1, 1, 1, 0, -1, -1, 1, 0};
  std::vector<double> payoffs = u1;
  for (double v : u1) payoffs.push_back(-v);
  FiniteGame g({3, 3}, payoffs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(support_enumeration_2p(g));
  }
}
BENCHMARK(BM_SupportEnumeration);

static void BM_CorrelatedOptimum(benchmark::State& state) {
  FiniteGame g = aumann_coordination();
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_over_equilibrium_set(
        g, {1.0, 1.0}, EquilibriumConcept::kCorrelated));
  }
}
BENCHMARK(BM_CorrelatedOptimum);

static void BM_RegretMatching(benchmark::State& state) {
  FiniteGame g = cr_dilemma();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        regret_matching(g, static_cast<int>(state.range(0)), 1));
  }
}
BENCHMARK(BM_RegretMatching)->Arg(1000)->Arg(10000);

static void BM_Waterfilling(benchmark::State& state) {
  InterferenceChannel ch = InterferenceChannel::mac(
      4, 8,
      {1.0, 0.4, 0.7, 1.2, 0.3, 0.9, 0.6, 1.1, 0.8, 0.5, 1.3, 0.2,
       0.9, 0.7, 0.4, 1.0, 0.6, 1.2, 0.8, 0.3, 1.1, 0.5, 0.9, 0.7,
       0.2, 1.3, 0.6, 0.8, 1.0, 0.4, 0.7, 1.2},
      1.0, 2.0);
  std::vector<std::vector<double>> others(4, std::vector<double>(8, 0.2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(waterfilling_best_response(ch, 0, others));
  }
}
BENCHMARK(BM_Waterfilling);

static void BM_Shapley(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  TUGame g = TUGame::from_evaluator(k, [](Coalition c) {
    double s = coalition_size(c);
    return s * s;
  });
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapley(g));
  }
}
BENCHMARK(BM_Shapley)->Arg(8)->Arg(12);

static void BM_CoreSolve(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  TUGame g = TUGame::from_evaluator(k, [](Coalition c) {
    double s = coalition_size(c);
    return s * s;
  });
  for (auto _ : state) {
    benchmark::DoNotOptimize(core_solve(g));
  }
}
BENCHMARK(BM_CoreSolve)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
