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

#include "gte/io.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "gte/formation.hpp"
#include "gte/game_ops.hpp"
#include "gte/rng.hpp"
#include "gte/solvers.hpp"

namespace gte {

using nlohmann::json;

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json number(double v) { return json(round_output(v)); }

json vector_to_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

json profile_to_json(const PureProfile& s) {
  json out = json::array();
  for (int a : s) out.push_back(a);
  return out;
}

json mixed_to_json(const MixedProfile& m) {
  json out = json::array();
  for (int k = 0; k < m.num_players(); ++k) out.push_back(vector_to_json(m.player(k)));
  return out;
}

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (Coalition c : p.coalitions()) {
    json block = json::array();
    for (int i = 0; c != 0; ++i, c >>= 1) {
      if (c & 1) block.push_back(i);
    }
    out.push_back(std::move(block));
  }
  return out;
}

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ValidationError(std::string("missing field `") + name + "`");
  }
  return *it;
}

double require_number(const json& j, const char* name) {
  const json& f = require_field(j, name);
  if (!f.is_number()) {
    throw ValidationError(std::string("field `") + name + "` must be a number");
  }
  return f.get<double>();
}

std::string coalition_key(Coalition c) {
  std::string key;
  for (int i = 0; c != 0; ++i, c >>= 1) {
    if (c & 1) {
      if (!key.empty()) key += ',';
      key += std::to_string(i);
    }
  }
  return key;
}

Coalition coalition_from_key(const std::string& key, int num_players) {
  Coalition c = 0;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int i = -1;
    try {
      i = std::stoi(tok);
    } catch (...) {
      throw ValidationError("bad coalition key `" + key + "`");
    }
    if (i < 0 || i >= num_players) {
      throw ValidationError("player index out of range in key `" + key + "`");
    }
    c |= Coalition{1} << i;
  }
  return c;
}

json parse_params(const std::string& params) {
  if (params.empty()) return json::object();
  json j;
  try {
    j = json::parse(params);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("bad params JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("params must be a JSON object");
  return j;
}

double param_or(const json& p, const char* name, double fallback) {
  auto it = p.find(name);
  return it == p.end() ? fallback : it->get<double>();
}

PureProfile init_profile(const json& p, const FiniteGame& game) {
  PureProfile s(game.num_players(), 0);
  auto it = p.find("init");
  if (it != p.end()) {
    s = it->get<PureProfile>();
  }
  game.validate_profile(s);
  return s;
}

FiniteGame resolve_finite_game(const RunConfig& config, const json& params) {
  if (!config.scenario.empty()) return scenario_by_name(config.scenario, params);
  if (config.game_path.empty()) {
    throw ValidationError("either a scenario name or a game file is required");
  }
  LoadedGame loaded = load_game(config.game_path);
  if (!loaded.finite) {
    throw ValidationError("file does not describe a strategic-form game");
  }
  return std::move(*loaded.finite);
}

TUGame resolve_tu_game(const RunConfig& config, const json& params) {
  if (!config.game_path.empty()) {
    LoadedGame loaded = load_game(config.game_path);
    if (loaded.tu) return std::move(*loaded.tu);
    if (loaded.ctd) {
      const CTDNetwork net = *loaded.ctd;
      return TUGame::from_evaluator(net.num_stations, [net](Coalition c) {
        std::vector<int> members;
        for (int i = 0; i < net.num_stations; ++i) {
          if (c & (Coalition{1} << i)) members.push_back(i);
        }
        return ctd_value(net, members);
      });
    }
    throw ValidationError("file does not describe a coalition-form game");
  }
  auto it = params.find("values");
  if (it != params.end()) {
    json doc = params;
    return tu_game_from_json(doc);
  }
  throw ValidationError("a TU game file or inline `values` is required");
}

json trace_summary(const LearningTrace& trace) {
  json out;
  out["algorithm"] = trace.algorithm;
  out["seed"] = trace.seed;
  out["iterations"] = trace.iterations;
  out["converged"] = trace.converged;
  if (!trace.records.empty()) {
    out["final_values"] = vector_to_json(trace.records.back().values);
    out["final_utilities"] = vector_to_json(trace.records.back().utilities);
  }
  if (!trace.final_policies.empty()) {
    json pol = json::array();
    for (const auto& p : trace.final_policies) pol.push_back(vector_to_json(p));
    out["final_policies"] = std::move(pol);
  }
  if (trace.empirical_joint) {
    out["empirical_joint"] = vector_to_json(trace.empirical_joint->probs());
  }
  return out;
}

json run_solve(const RunConfig& config, const json& params, bool* converged) {
  const FiniteGame game = resolve_finite_game(config, params);
  const std::string& algo = config.algorithm;
  json out;
  if (algo == "pure-ne") {
    out["equilibria"] = json::array();
    for (const auto& s : enumerate_pure_ne(game)) {
      out["equilibria"].push_back(profile_to_json(s));
    }
  } else if (algo == "mixed-2x2") {
    out["equilibria"] = json::array();
    for (const auto& m : mixed_ne_2x2(game)) {
      out["equilibria"].push_back(mixed_to_json(m));
    }
  } else if (algo == "support-enum") {
    out["equilibria"] = json::array();
    for (const auto& m : support_enumeration_2p(game)) {
      out["equilibria"].push_back(mixed_to_json(m));
    }
  } else if (algo == "zero-sum") {
    const ZeroSumSolution sol = zero_sum_value(game);
    out["value"] = number(sol.value);
    out["strategies"] = mixed_to_json(sol.strategies);
  } else if (algo == "ce" || algo == "cce") {
    const auto kind = algo == "ce" ? EquilibriumConcept::kCorrelated
                                      : EquilibriumConcept::kCoarseCorrelated;
    std::vector<double> weights(game.num_players(), 1.0);
    auto it = params.find("weights");
    if (it != params.end()) weights = it->get<std::vector<double>>();
    const EquilibriumOptimum opt = optimize_over_equilibrium_set(game, weights, kind);
    out["distribution"] = vector_to_json(opt.q.probs());
    out["expected_utilities"] = vector_to_json(opt.expected_utilities);
    out["objective"] = number(opt.objective);
  } else if (algo == "poa") {
    out["value"] = number(price_of_anarchy(game, enumerate_pure_ne(game)));
  } else if (algo == "social-optimum") {
    const SocialOptimum opt = social_optimum(game);
    out["profile"] = profile_to_json(opt.profile);
    out["welfare"] = number(opt.welfare);
  } else if (algo == "potential") {
    const auto phi = find_exact_potential(game, config.tol);
    out["exact_potential"] = phi.has_value();
    if (phi) out["values"] = vector_to_json(phi->values);
  } else if (algo == "nbs") {
    const auto sq = require_field(params, "status_quo").get<std::vector<double>>();
    const NashBargainingResult nbs = nash_bargaining(game, sq);
    out["argument"] = vector_to_json(nbs.argument);
    out["utilities"] = vector_to_json(nbs.utilities);
    out["nash_product"] = number(nbs.nash_product);
  } else {
    throw ValidationError("unknown solver `" + algo + "`");
  }
  *converged = true;
  return out;
}

json run_learn(const RunConfig& config, const json& params, bool* converged,
               LearningTrace* trace_out) {
  const std::string& algo = config.algorithm;
  LearningTrace trace;
  if (algo == "consensus") {
    ConsensusNetwork net;
    net.neighbors = require_field(params, "neighbors")
                        .get<std::vector<std::vector<int>>>();
    net.weights = require_field(params, "weights")
                      .get<std::vector<std::vector<double>>>();
    net.num_nodes = static_cast<int>(net.neighbors.size());
    const auto init = require_field(params, "init").get<std::vector<double>>();
    trace = consensus(net, init, config.eps, config.iters);
  } else if (algo == "repeated") {
    const FiniteGame game = resolve_finite_game(config, params);
    const std::string plan = params.value("plan", "trigger");
    const int coop = static_cast<int>(param_or(params, "coop_action", 1));
    const int punish = static_cast<int>(param_or(params, "defect_action", 0));
    HistoryStrategy strategy;
    if (plan == "trigger") {
      strategy = [coop, punish](const std::vector<PureProfile>& h) {
        for (const auto& s : h) {
          for (int a : s) {
            if (a != coop) return punish;
          }
        }
        return coop;
      };
    } else if (plan == "all-defect") {
      strategy = [punish](const std::vector<PureProfile>&) { return punish; };
    } else {
      throw ValidationError("unknown plan `" + plan + "`");
    }
    std::vector<HistoryStrategy> strategies(game.num_players(), strategy);
    const RepeatedGameResult result = repeated_game_run(
        game, strategies, WeightSchedule::running_average(), config.iters);
    json out;
    out["long_run_utilities"] = vector_to_json(result.long_run_utilities);
    out["stages"] = config.iters;
    *converged = true;
    return out;
  } else {
    const FiniteGame game = resolve_finite_game(config, params);
    if (algo == "brd-seq") {
      trace = brd_sequential(game, init_profile(params, game), config.eps,
                             config.iters, config.seed);
    } else if (algo == "brd-sim") {
      trace = brd_simultaneous(game, init_profile(params, game), config.eps,
                               config.iters, param_or(params, "kappa", 0.0),
                               config.seed);
    } else if (algo == "fp") {
      trace = fictitious_play(game, init_profile(params, game), config.iters,
                              config.seed);
    } else if (algo == "rl") {
      const FiniteGame normalized = normalize_utilities(game);
      trace = bush_mosteller(normalized, MixedProfile::uniform(game.action_counts()),
                             param_or(params, "lambda", 0.1), config.iters,
                             config.seed);
    } else if (algo == "rm") {
      trace = regret_matching(game, config.iters, config.seed);
    } else {
      throw ValidationError("unknown learning rule `" + algo + "`");
    }
  }
  *converged = trace.converged;
  json out = trace_summary(trace);
  if (trace_out) *trace_out = std::move(trace);
  return out;
}

json run_coalition(const RunConfig& config, const json& params, bool* converged) {
  const TUGame game = resolve_tu_game(config, params);
  const std::string& algo = config.algorithm;
  json out;
  if (algo == "core") {
    const CoreResult core = core_solve(game);
    out["nonempty"] = core.nonempty;
    out["lp_value"] = number(core.lp_value);
    if (core.allocation) out["allocation"] = vector_to_json(*core.allocation);
  } else if (algo == "least-core") {
    const bool strong = params.value("strong", false);
    const LeastCoreResult lc = least_epsilon_core(game, strong);
    out["epsilon"] = number(lc.epsilon);
    out["allocation"] = vector_to_json(lc.allocation);
  } else if (algo == "shapley") {
    out["allocation"] = vector_to_json(shapley(game));
  } else if (algo == "shapley-mc") {
    const auto samples =
        static_cast<std::int64_t>(param_or(params, "samples", 100000));
    const ShapleyMcResult mc = shapley_monte_carlo(game, samples, config.seed);
    out["allocation"] = vector_to_json(mc.value);
    out["std_errors"] = vector_to_json(mc.std_errors);
  } else if (algo == "partition") {
    const OptimalPartitionResult opt = optimal_partition(game);
    out["partition"] = partition_to_json(opt.partition);
    out["total"] = number(opt.total);
  } else if (algo == "balanced") {
    const BalancednessResult b = is_balanced(game);
    out["balanced"] = b.balanced;
    json cert = json::array();
    for (const auto& [c, mu] : b.certificate) {
      cert.push_back({{"coalition", coalition_key(c)}, {"weight", number(mu)}});
    }
    out["certificate"] = std::move(cert);
  } else {
    throw ValidationError("unknown coalition solver `" + algo + "`");
  }
  *converged = true;
  return out;
}

json run_formation(const RunConfig& config, const json& params, bool* converged) {
  AllocationRule rule = AllocationRule::equal_split();
  const std::string rule_name =
      config.algorithm.empty() ? params.value("rule", "equal") : config.algorithm;

  std::optional<CTDNetwork> ctd;
  if (!config.game_path.empty()) {
    LoadedGame loaded = load_game(config.game_path);
    if (loaded.ctd) ctd = std::move(loaded.ctd);
  }
  const TUGame game = resolve_tu_game(config, params);

  if (rule_name == "equal") {
    rule = AllocationRule::equal_split();
  } else if (rule_name == "shapley") {
    rule = AllocationRule::shapley_within_coalition();
  } else if (rule_name == "ntu") {
    if (!ctd) throw ValidationError("the NTU rule requires a ctd game file");
    const CTDNetwork net = *ctd;
    rule = AllocationRule::identity_ntu([net](Coalition c) {
      std::vector<int> members;
      for (int i = 0; i < net.num_stations; ++i) {
        if (c & (Coalition{1} << i)) members.push_back(i);
      }
      return std::vector<double>(members.size(), ctd_value(net, members));
    });
  } else {
    throw ValidationError("unknown allocation rule `" + rule_name + "`");
  }

  const std::string init_name = params.value("init", "singletons");
  Partition init = init_name == "grand" ? Partition::grand(game.num_players())
                                        : Partition::singletons(game.num_players());
  const int max_group = static_cast<int>(param_or(params, "max_group", 2));
  std::optional<std::uint64_t> order_seed;
  if (params.value("shuffle", false)) order_seed = config.seed;

  const FormationState state =
      merge_split_run(game, rule, init, config.iters, max_group, order_seed);
  *converged = state.converged;

  json out;
  out["partition"] = partition_to_json(state.partition);
  out["payoffs"] = vector_to_json(state.payoffs);
  out["operations"] = state.iterations;
  out["converged"] = state.converged;
  json hist = json::array();
  for (const auto& op : state.history) {
    json rec;
    rec["kind"] = op.is_merge ? "merge" : "split";
    rec["removed"] = json::array();
    for (Coalition c : op.removed) rec["removed"].push_back(coalition_key(c));
    rec["added"] = json::array();
    for (Coalition c : op.added) rec["added"].push_back(coalition_key(c));
    hist.push_back(std::move(rec));
  }
  out["history"] = std::move(hist);
  return out;
}

}  // namespace

double round_output(double v) {
  return std::strtod(format_number(v).c_str(), nullptr);
}

json finite_game_to_json(const FiniteGame& game) {
  if (!game.is_dense()) {
    throw CapabilityError("evaluator-backed games cannot be serialized");
  }
  json j;
  j["players"] = game.num_players();
  json actions = json::array();
  for (int k = 0; k < game.num_players(); ++k) {
    json labels = json::array();
    for (int a = 0; a < game.action_count(k); ++a) {
      labels.push_back(game.action_labels ? (*game.action_labels)[k][a]
                                          : "a" + std::to_string(a));
    }
    actions.push_back(std::move(labels));
  }
  j["actions"] = std::move(actions);

  const std::uint64_t n = game.profile_count();
  json payoffs = json::array();
  for (int k = 0; k < game.num_players(); ++k) {
    json row = json::array();
    for (std::uint64_t f = 0; f < n; ++f) row.push_back(number(game.payoff_flat(k, f)));
    payoffs.push_back(std::move(row));
  }
  j["payoffs"] = std::move(payoffs);
  return j;
}

FiniteGame finite_game_from_json(const json& j) {
  const int players = static_cast<int>(require_number(j, "players"));
  const json& actions = require_field(j, "actions");
  if (!actions.is_array() || static_cast<int>(actions.size()) != players) {
    throw ValidationError("`actions` must list one label array per player");
  }
  std::vector<int> counts(players);
  std::vector<std::vector<std::string>> labels(players);
  for (int k = 0; k < players; ++k) {
    if (!actions[k].is_array() || actions[k].empty()) {
      throw ValidationError("`actions` entry for player " + std::to_string(k) +
                            " must be a non-empty array");
    }
    counts[k] = static_cast<int>(actions[k].size());
    labels[k] = actions[k].get<std::vector<std::string>>();
  }

  std::uint64_t n = 1;
  for (int c : counts) n *= c;
  const json& payoffs = require_field(j, "payoffs");
  if (!payoffs.is_array() || static_cast<int>(payoffs.size()) != players) {
    throw ValidationError("`payoffs` must list one row per player");
  }
  std::vector<double> flat(static_cast<std::size_t>(players) * n);
  for (int k = 0; k < players; ++k) {
    if (!payoffs[k].is_array() || payoffs[k].size() != n) {
      throw ValidationError("payoff row for player " + std::to_string(k) +
                            " must have " + std::to_string(n) + " profiles, got " +
                            std::to_string(payoffs[k].size()));
    }
    for (std::uint64_t f = 0; f < n; ++f) {
      if (!payoffs[k][f].is_number()) {
        throw ValidationError("non-numeric payoff at player " + std::to_string(k) +
                              ", profile index " + std::to_string(f));
      }
      flat[static_cast<std::size_t>(k) * n + f] = payoffs[k][f].get<double>();
    }
  }
  FiniteGame game(std::move(counts), std::move(flat));
  game.action_labels = std::move(labels);
  return game;
}

json tu_game_to_json(const TUGame& game) {
  json j;
  j["players"] = game.num_players();
  json values = json::object();
  for (Coalition c = 1; c <= game.grand(); ++c) {
    values[coalition_key(c)] = number(game.value(c));
  }
  j["values"] = std::move(values);
  return j;
}

TUGame tu_game_from_json(const json& j) {
  const int players = static_cast<int>(require_number(j, "players"));
  const json& values = require_field(j, "values");
  if (!values.is_object()) throw ValidationError("`values` must be an object");
  const bool has_default = j.contains("default");
  const double fallback = has_default ? j["default"].get<double>() : 0.0;

  if (players < 1 || players > 20) {
    throw ValidationError("player count must be between 1 and 20");
  }
  std::vector<double> table(std::size_t{1} << players,
                            has_default ? fallback : 0.0);
  std::vector<bool> given(table.size(), false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it.key().empty()) {
      if (it.value().get<double>() != 0.0) {
        throw ValidationError("the empty coalition must be worth 0");
      }
      continue;
    }
    const Coalition c = coalition_from_key(it.key(), players);
    table[c] = it.value().get<double>();
    given[c] = true;
  }
  if (!has_default) {
    for (Coalition c = 1; c < table.size(); ++c) {
      if (!given[c]) {
        throw ValidationError("value missing for coalition {" + coalition_key(c) +
                              "} and no default given");
      }
    }
  }
  table[0] = 0.0;
  return TUGame(players, std::move(table));
}

InterferenceChannel channel_from_json(const json& j) {
  const std::string topology = require_field(j, "topology").get<std::string>();
  const int num_tx = static_cast<int>(require_number(j, "num_tx"));
  const int num_bands = static_cast<int>(require_number(j, "num_bands"));
  const double noise = require_number(j, "noise");
  const double budget = require_number(j, "budget");
  const json& gains = require_field(j, "gains");

  if (topology == "mac") {
    std::vector<double> flat;
    for (const auto& row : gains) {
      for (const auto& g : row) flat.push_back(g.get<double>());
    }
    return InterferenceChannel::mac(num_tx, num_bands, std::move(flat), noise, budget);
  }
  if (topology == "interference") {
    std::vector<double> flat;
    for (const auto& tx : gains) {
      for (const auto& rx : tx) {
        for (const auto& g : rx) flat.push_back(g.get<double>());
      }
    }
    return InterferenceChannel::interference(num_tx, num_bands, std::move(flat),
                                             noise, budget);
  }
  throw ValidationError("`topology` must be `mac` or `interference`");
}

CTDNetwork ctd_from_json(const json& j) {
  CTDNetwork net;
  net.detection = require_field(j, "detection").get<std::vector<double>>();
  net.false_alarm = require_field(j, "false_alarm").get<std::vector<double>>();
  net.num_stations = static_cast<int>(net.detection.size());
  net.alpha = require_number(j, "alpha");
  net.validate();
  return net;
}

LoadedGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file `" + path + "`");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("parse error in `" + path + "`: " + e.what());
  }

  LoadedGame out;
  if (j.contains("channel")) {
    out.channel = channel_from_json(j["channel"]);
  } else if (j.contains("ctd")) {
    out.ctd = ctd_from_json(j["ctd"]);
  } else if (j.contains("values")) {
    out.tu = tu_game_from_json(j);
  } else if (j.contains("payoffs")) {
    out.finite = finite_game_from_json(j);
  } else {
    throw ValidationError("`" + path + "` matches no known game schema");
  }
  return out;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file `" + path + "`");
  out << j.dump(2) << '\n';
}

std::string trace_to_csv(const LearningTrace& trace) {
  std::string csv = "iter,player,action_or_value,utility\n";
  for (std::size_t t = 0; t < trace.records.size(); ++t) {
    const TraceRecord& r = trace.records[t];
    for (std::size_t p = 0; p < r.values.size(); ++p) {
      csv += std::to_string(t);
      csv += ',';
      csv += std::to_string(p);
      csv += ',';
      csv += format_number(r.values[p]);
      csv += ',';
      if (p < r.utilities.size()) csv += format_number(r.utilities[p]);
      csv += '\n';
    }
  }
  return csv;
}

FiniteGame scenario_by_name(const std::string& name, const json& params) {
  if (name == "sensor-dilemma") {
    return sensor_dilemma(param_or(params, "e", 0.2));
  }
  if (name == "cr-dilemma") return cr_dilemma();
  if (name == "aumann") return aumann_coordination();
  if (name == "ducks") {
    return duck_foraging(static_cast<int>(param_or(params, "players", 33)),
                         param_or(params, "rate_fast", 24.0),
                         param_or(params, "rate_slow", 12.0));
  }
  if (name == "matching-pennies") {
    FiniteGame game({2, 2}, {1, -1, -1, 1, -1, 1, 1, -1});
    game.action_labels =
        std::vector<std::vector<std::string>>(2, {"heads", "tails"});
    return game;
  }
  throw ValidationError("unknown scenario `" + name + "`");
}

std::vector<std::string> scenario_names() {
  return {"sensor-dilemma", "cr-dilemma", "aumann", "ducks", "matching-pennies"};
}

json result_to_json(const ResultRecord& record, bool include_wall_time) {
  json j;
  j["command"] = record.command;
  j["algorithm"] = record.algorithm;
  j["ok"] = record.ok;
  j["converged"] = record.converged;
  if (!record.ok) j["error"] = record.error;
  j["output"] = record.output;
  if (include_wall_time) j["wall_time_ms"] = record.wall_time_ms;
  return j;
}

ResultRecord run(const RunConfig& config) {
  ResultRecord record;
  record.command = config.command;
  record.algorithm = config.algorithm;
  const auto start = std::chrono::steady_clock::now();

  LearningTrace trace;
  bool have_trace = false;
  try {
    const json params = parse_params(config.params);
    bool converged = true;
    if (config.command == "scenario") {
      record.output = finite_game_to_json(resolve_finite_game(config, params));
    } else if (config.command == "solve") {
      record.output = run_solve(config, params, &converged);
    } else if (config.command == "learn") {
      record.output = run_learn(config, params, &converged, &trace);
      have_trace = !trace.records.empty();
    } else if (config.command == "coalition") {
      record.output = run_coalition(config, params, &converged);
    } else if (config.command == "formation") {
      record.output = run_formation(config, params, &converged);
    } else {
      throw ValidationError("unknown command `" + config.command + "`");
    }
    record.converged = converged;
  } catch (const ValidationError& e) {
    record.ok = false;
    record.error = std::string("validation: ") + e.what();
  } catch (const CapacityError& e) {
    record.ok = false;
    record.error = std::string("capacity: ") + e.what();
  } catch (const CapabilityError& e) {
    record.ok = false;
    record.error = std::string("capability: ") + e.what();
  } catch (const std::exception& e) {
    record.ok = false;
    record.error = std::string("internal: ") + e.what();
  }

  record.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();

  if (record.ok && !config.out_path.empty()) {
    try {
      if (config.format == "csv" && have_trace) {
        std::ofstream out(config.out_path);
        if (!out) throw ValidationError("cannot write `" + config.out_path + "`");
        out << trace_to_csv(trace);
      } else {
        save_json(config.out_path, result_to_json(record, false));
      }
    } catch (const std::exception& e) {
      record.ok = false;
      record.error = std::string("validation: ") + e.what();
    }
  }
  return record;
}

std::vector<ResultRecord> batch(const std::vector<RunConfig>& configs,
                                int parallelism) {
  if (parallelism < 1) throw ValidationError("parallelism must be positive");
  std::vector<ResultRecord> results(configs.size());
  if (configs.empty()) return results;

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      results[i] = run(configs[i]);
    }
  };
  const int workers =
      std::min<int>(parallelism, static_cast<int>(configs.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace gte
