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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gte/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitNonConvergence = 4;

void add_common_flags(CLI::App* cmd, gte::RunConfig* config) {
  cmd->add_option("--scenario", config->scenario, "Built-in scenario name");
  cmd->add_option("--game", config->game_path, "JSON game file");
  cmd->add_option("--params", config->params, "Extra parameters as a JSON object");
  cmd->add_option("--seed", config->seed, "Random seed");
  cmd->add_option("--out", config->out_path, "Output file path");
  cmd->add_option("--tol", config->tol, "Numerical tolerance");
  cmd->add_option("--format", config->format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--strict", config->strict,
                "Exit with code 4 when the run does not converge");
}

int exit_code(const gte::ResultRecord& record, bool strict) {
  if (!record.ok) {
    if (record.error.rfind("capacity:", 0) == 0) return kExitCapacity;
    return kExitValidation;
  }
  if (strict && !record.converged) return kExitNonConvergence;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theory engine: equilibria, learning dynamics, coalitions"};
  app.require_subcommand(1);

  gte::RunConfig config;

  CLI::App* solve = app.add_subcommand("solve", "Equilibrium and welfare solvers");
  solve->add_option("--solver", config.algorithm,
                    "pure-ne | mixed-2x2 | support-enum | zero-sum | ce | cce | "
                    "poa | social-optimum | potential | nbs")
      ->required();
  add_common_flags(solve, &config);

  CLI::App* learn = app.add_subcommand("learn", "Learning dynamics");
  learn->add_option("--algo", config.algorithm,
                    "brd-seq | brd-sim | fp | rl | rm | consensus | repeated")
      ->required();
  learn->add_option("--iters", config.iters, "Iteration budget");
  learn->add_option("--eps", config.eps, "Convergence threshold");
  add_common_flags(learn, &config);

  CLI::App* coalition = app.add_subcommand("coalition", "Coalition-form solvers");
  coalition->add_option("--solver", config.algorithm,
                        "core | least-core | shapley | shapley-mc | partition | "
                        "balanced")
      ->required();
  add_common_flags(coalition, &config);

  CLI::App* formation = app.add_subcommand("formation", "Merge-and-split dynamics");
  formation->add_option("--rule", config.algorithm, "equal | shapley | ntu");
  formation->add_option("--iters", config.iters, "Operation budget");
  add_common_flags(formation, &config);

  CLI::App* scenario = app.add_subcommand("scenario", "Materialize a named scenario");
  scenario->add_option("name", config.scenario, "Scenario name")->required();
  add_common_flags(scenario, &config);

  CLI11_PARSE(app, argc, argv);
  config.command = app.get_subcommands().front()->get_name();

  const gte::ResultRecord record = gte::run(config);
  std::cout << gte::result_to_json(record, true).dump(2) << '\n';
  if (!record.ok) std::cerr << record.error << '\n';
  return exit_code(record, config.strict);
}
