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

#ifndef GTE_IO_HPP_
#define GTE_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gte/coalition.hpp"
#include "gte/dynamics.hpp"
#include "gte/finite_game.hpp"
#include "gte/scenarios.hpp"

namespace gte {

/// Rounds to 12 significant digits; applied to every float that reaches an
/// output document so golden files stay stable.
double round_output(double v);

nlohmann::json finite_game_to_json(const FiniteGame& game);
FiniteGame finite_game_from_json(const nlohmann::json& j);

nlohmann::json tu_game_to_json(const TUGame& game);
TUGame tu_game_from_json(const nlohmann::json& j);

InterferenceChannel channel_from_json(const nlohmann::json& j);
CTDNetwork ctd_from_json(const nlohmann::json& j);

/// Exactly one member is set, depending on the document's top-level keys
/// (`payoffs` -> finite game, `values` -> TU game, `channel`, `ctd`).
struct LoadedGame {
  std::optional<FiniteGame> finite;
  std::optional<TUGame> tu;
  std::optional<InterferenceChannel> channel;
  std::optional<CTDNetwork> ctd;
};

LoadedGame load_game(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

/// CSV export with header `iter,player,action_or_value,utility`.
std::string trace_to_csv(const LearningTrace& trace);

/// Scenario registry used by the CLI: builds a finite game by name with
/// JSON parameters (e.g. {"e": 0.2} for sensor-dilemma).
FiniteGame scenario_by_name(const std::string& name, const nlohmann::json& params);
std::vector<std::string> scenario_names();

struct RunConfig {
  std::string command;    // solve | learn | coalition | formation | scenario
  std::string scenario;   // scenario name (alternative to game_path)
  std::string game_path;  // JSON game file (alternative to scenario)
  std::string algorithm;  // solver / learning-rule / coalition-solver id
  std::string params;     // JSON object with extra parameters
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int iters = 1000;
  double eps = 0.0;
  std::string out_path;
  std::string format = "json";  // json | csv
  bool strict = false;
};

struct ResultRecord {
  std::string command;
  std::string algorithm;
  nlohmann::json output;
  bool ok = true;
  bool converged = true;
  std::string error;
  double wall_time_ms = 0.0;
};

/// Serialization of a record; the wall-time field is optional so that two
/// identical runs can be compared byte-for-byte.
nlohmann::json result_to_json(const ResultRecord& record, bool include_wall_time);

/// Executes one configuration. Module errors are reported in the record
/// (ok = false, error classified) rather than thrown.
ResultRecord run(const RunConfig& config);

/// Runs independent configurations on up to `parallelism` threads; results
/// are returned in input order and failures are isolated per record.
std::vector<ResultRecord> batch(const std::vector<RunConfig>& configs,
                                int parallelism);

}  // namespace gte

#endif  // GTE_IO_HPP_
