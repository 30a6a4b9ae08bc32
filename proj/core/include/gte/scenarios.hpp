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

#ifndef GTE_SCENARIOS_HPP_
#define GTE_SCENARIOS_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gte/finite_game.hpp"

namespace gte {

enum class ChannelTopology { kInterference, kMac };

/// Multi-band wireless channel shared by K transmitters. Gains are linear
/// power gains h(tx, rx, band); under the MAC topology every transmitter
/// reaches the same receiver, so gains do not depend on the receiver index.
struct InterferenceChannel {
  int num_tx = 0;
  int num_bands = 0;
  ChannelTopology topology = ChannelTopology::kInterference;
  std::vector<double> gains;  // (tx*K + rx)*N + band
  double noise = 0.0;         // sigma^2 > 0
  double budget = 0.0;        // per-transmitter power budget P > 0

  static InterferenceChannel interference(int num_tx, int num_bands,
                                          std::vector<double> gains, double noise,
                                          double budget);
  // mac_gains is tx-major: mac_gains[k*num_bands + n] = h_{k,n}.
  static InterferenceChannel mac(int num_tx, int num_bands,
                                 std::vector<double> mac_gains, double noise,
                                 double budget);

  double gain(int tx, int rx, int band) const {
    return gains[(static_cast<std::size_t>(tx) * num_tx + rx) * num_bands + band];
  }
  double sinr(int k, int band, const std::vector<std::vector<double>>& powers) const;
  void validate() const;
};

/// Two-transmitter beamforming setup; h_ij is the channel from transmitter i
/// to receiver j.
struct BeamformingInstance {
  int num_antennas = 0;
  std::vector<std::complex<double>> h11, h12, h21, h22;
  double power = 1.0;  // E|x_i|^2

  void validate() const;
};

/// Distributed detection network: stations fused by the OR rule under a
/// network-wide false-alarm cap.
struct CTDNetwork {
  int num_stations = 0;
  std::vector<double> detection;    // P_d,i in [0, 1]
  std::vector<double> false_alarm;  // P_f,i in [0, 1]
  double alpha = 0.0;               // cap in (0, 1)

  void validate() const;
};

/// 2x2 sensing dilemma: sleeping free-rides on the other fusion center's
/// active sensing at cost e. Actions: 0 = sleep, 1 = active.
FiniteGame sensor_dilemma(double e);

/// 2x2 spectrum-sharing dilemma. Actions: 0 = wideband, 1 = narrowband.
/// Wideband is strictly dominant; the unique NE has welfare 2 against a
/// welfare optimum of 6.
FiniteGame cr_dilemma();

/// 2x2 coordination game with pure NE payoffs (5,1) and (1,5), interior
/// mixed NE payoffs (5/2, 5/2) and correlated welfare optimum (10/3, 10/3).
FiniteGame aumann_coordination();

/// K-player congestion game over two foraging sites. Actions: 0 = fast site,
/// 1 = slow site; u_k = rate(site) / occupancy(site). Dense up to 20 players,
/// evaluator-backed beyond.
FiniteGame duck_foraging(int num_players, double rate_fast, double rate_slow);

/// Power-allocation game: each transmitter spreads its budget over the
/// bands, u_k = sum_n log2(1 + sinr). Boxes [0, P]^N per player; the
/// best-response oracle is iterative water-filling.
ContinuousGame pa_game(const InterferenceChannel& channel);

/// Band-selection game: N pure actions per player, action n puts the whole
/// budget on band n.
FiniteGame bs_game(const InterferenceChannel& channel);

/// Water-filling best response of transmitter k given the other players'
/// power vectors. Exact water level via the sorted cumulative formula;
/// budget met within 1e-10.
std::vector<double> waterfilling_best_response(
    const InterferenceChannel& channel, int k,
    const std::vector<std::vector<double>>& others_powers);

/// Exact potential of the MAC game: sum_n log2(sigma^2 + sum_k h_{k,n} p_{k,n}).
double mac_potential(const InterferenceChannel& channel,
                     const std::vector<std::vector<double>>& powers);

struct SpectralRadiusResult {
  std::vector<double> radii;  // per receiver, max over bands
  bool holds = false;
  std::string diagnostic;
};

/// Uniqueness/convergence condition for iterative water-filling: per-receiver
/// interference-ratio matrices (zero diagonal, entries h_{lj,n}/h_{kj,n})
/// must all have spectral radius < 1. Power iteration, 200 rounds.
SpectralRadiusResult spectral_radius_condition(const InterferenceChannel& channel);

enum class EfficiencyModel {
  kSigmoid,           // f(x) = (1 - e^{-x})^M, param = M
  kExponentialRatio,  // f(x) = e^{-a/x},      param = a
};

/// Energy-efficiency power control: u_k = f(sinr_k)/p_k - c_k p_k with
/// sinr_k = p_k / (noise + sum_{j != k} p_j). Action sets [1e-6*p_max, p_max];
/// best responses by golden-section search.
ContinuousGame energy_efficiency_game(int num_players, EfficiencyModel model,
                                      double param, double noise, double p_max,
                                      std::vector<double> pricing = {});

/// Two firms, inverse demand 1 - q_1 - q_2, zero cost, quantities in [0, 1].
/// Exact best-response oracle; NE at (1/3, 1/3).
ContinuousGame cournot_duopoly();

struct LinearSystemGame {
  ContinuousGame game;
  bool diagonally_dominant = false;
};

/// Two players minimize per-row squared residuals of A x = y (utilities are
/// negated costs). Exact best-response oracle solves each row for the
/// player's own variable.
LinearSystemGame linear_system_game(const std::vector<std::vector<double>>& a,
                                    const std::vector<double>& y);

/// Two-player game over mixing weights (alpha_1, alpha_2) in [0,1]^2 with
/// w_i = alpha_i * ZF + (1 - alpha_i) * MRT, renormalized to unit norm;
/// u_i = log(1 + SINR_i). alpha = 1 nulls the interference caused at the
/// other receiver.
ContinuousGame beamforming_game(const BeamformingInstance& instance);

/// Complex Gaussian channels drawn deterministically from the seed.
BeamformingInstance random_beamforming_instance(int num_antennas, double power,
                                                std::uint64_t seed);

/// OR-fused coalition value: Q_d = 1 - prod(1 - P_d,i), Q_f analogous;
/// value is Q_d when Q_f <= alpha and 0 otherwise. Empty coalition -> 0.
double ctd_value(const CTDNetwork& network, const std::vector<int>& coalition);

}  // namespace gte

#endif  // GTE_SCENARIOS_HPP_
