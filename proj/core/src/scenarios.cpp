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

#include "gte/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gte/rng.hpp"

namespace gte {

namespace {

constexpr double kLog2 = 0.6931471805599453;

double log2_safe(double x) { return std::log(x) / kLog2; }

// Dense 2x2 tensor from per-player payoff matrices u[player][a1][a2].
FiniteGame make_2x2(const double u1[2][2], const double u2[2][2],
                    std::vector<std::string> labels) {
  std::vector<double> payoffs = {u1[0][0], u1[0][1], u1[1][0], u1[1][1],
                                 u2[0][0], u2[0][1], u2[1][0], u2[1][1]};
  FiniteGame game({2, 2}, std::move(payoffs));
  game.action_labels = std::vector<std::vector<std::string>>{labels, labels};
  return game;
}

void validate_powers(const InterferenceChannel& channel,
                     const std::vector<std::vector<double>>& powers) {
  if (static_cast<int>(powers.size()) != channel.num_tx) {
    throw ValidationError("one power vector per transmitter required");
  }
  for (const auto& p : powers) {
    if (static_cast<int>(p.size()) != channel.num_bands) {
      throw ValidationError("power vector length must match band count");
    }
    for (double v : p) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw ValidationError("powers must be finite and non-negative");
      }
    }
  }
}

using Cx = std::complex<double>;

Cx inner(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  Cx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm2(const std::vector<Cx>& a) { return std::real(inner(a, a)); }

std::vector<Cx> normalized(std::vector<Cx> a) {
  const double n = std::sqrt(norm2(a));
  for (Cx& v : a) v /= n;
  return a;
}

// Unit projection of direct onto the orthogonal complement of cross.
std::vector<Cx> zero_forcing(const std::vector<Cx>& direct,
                             const std::vector<Cx>& cross) {
  const Cx coef = inner(cross, direct) / norm2(cross);
  std::vector<Cx> w = direct;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= coef * cross[i];
  return normalized(std::move(w));
}

}  // namespace

InterferenceChannel InterferenceChannel::interference(int num_tx, int num_bands,
                                                      std::vector<double> gains,
                                                      double noise, double budget) {
  InterferenceChannel c;
  c.num_tx = num_tx;
  c.num_bands = num_bands;
  c.topology = ChannelTopology::kInterference;
  c.gains = std::move(gains);
  c.noise = noise;
  c.budget = budget;
  c.validate();
  return c;
}

InterferenceChannel InterferenceChannel::mac(int num_tx, int num_bands,
                                             std::vector<double> mac_gains,
                                             double noise, double budget) {
  if (static_cast<int>(mac_gains.size()) !=
      static_cast<std::size_t>(num_tx) * num_bands) {
    throw ValidationError("MAC gain table must be num_tx * num_bands");
  }
  InterferenceChannel c;
  c.num_tx = num_tx;
  c.num_bands = num_bands;
  c.topology = ChannelTopology::kMac;
  c.noise = noise;
  c.budget = budget;
  c.gains.resize(static_cast<std::size_t>(num_tx) * num_tx * num_bands);
  for (int l = 0; l < num_tx; ++l) {
    for (int k = 0; k < num_tx; ++k) {
      for (int n = 0; n < num_bands; ++n) {
        c.gains[(static_cast<std::size_t>(l) * num_tx + k) * num_bands + n] =
            mac_gains[static_cast<std::size_t>(l) * num_bands + n];
      }
    }
  }
  c.validate();
  return c;
}

void InterferenceChannel::validate() const {
  if (num_tx <= 0 || num_bands <= 0) {
    throw ValidationError("channel needs at least one transmitter and band");
  }
  if (gains.size() != static_cast<std::size_t>(num_tx) * num_tx * num_bands) {
    throw ValidationError("gain table must be num_tx * num_tx * num_bands");
  }
  for (double g : gains) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw ValidationError("gains must be finite and non-negative");
    }
  }
  if (!(noise > 0.0) || !(budget > 0.0)) {
    throw ValidationError("noise power and budget must be positive");
  }
  if (topology == ChannelTopology::kMac) {
    for (int l = 0; l < num_tx; ++l) {
      for (int k = 1; k < num_tx; ++k) {
        for (int n = 0; n < num_bands; ++n) {
          if (gain(l, k, n) != gain(l, 0, n)) {
            throw ValidationError("MAC gains must not depend on the receiver");
          }
        }
      }
    }
  }
}

double InterferenceChannel::sinr(int k, int band,
                                 const std::vector<std::vector<double>>& powers) const {
  double interference = noise;
  for (int l = 0; l < num_tx; ++l) {
    if (l != k) interference += gain(l, k, band) * powers[l][band];
  }
  return gain(k, k, band) * powers[k][band] / interference;
}

void BeamformingInstance::validate() const {
  if (num_antennas <= 0) throw ValidationError("antenna count must be positive");
  for (const auto* h : {&h11, &h12, &h21, &h22}) {
    if (static_cast<int>(h->size()) != num_antennas) {
      throw ValidationError("channel vector length must match antenna count");
    }
    if (norm2(*h) <= 0.0) throw ValidationError("channel vectors must be non-zero");
  }
  if (!(power > 0.0)) throw ValidationError("transmit power must be positive");
  auto colinear = [](const std::vector<Cx>& a, const std::vector<Cx>& b) {
    const double c = std::norm(inner(a, b));
    return c >= (1.0 - 1e-12) * norm2(a) * norm2(b);
  };
  if (colinear(h11, h12) || colinear(h22, h21)) {
    throw ValidationError("direct channel colinear with cross channel");
  }
}

void CTDNetwork::validate() const {
  if (num_stations <= 0) throw ValidationError("network needs stations");
  if (static_cast<int>(detection.size()) != num_stations ||
      static_cast<int>(false_alarm.size()) != num_stations) {
    throw ValidationError("per-station probabilities must cover every station");
  }
  for (int i = 0; i < num_stations; ++i) {
    if (!(detection[i] >= 0.0 && detection[i] <= 1.0) ||
        !(false_alarm[i] >= 0.0 && false_alarm[i] <= 1.0)) {
      throw ValidationError("station probabilities must lie in [0, 1]");
    }
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("false-alarm cap must lie in (0, 1)");
  }
}

FiniteGame sensor_dilemma(double e) {
  // The endpoints create payoff ties and break the dilemma structure.
  if (!(e > 0.0 && e < 1.0)) throw ValidationError("sensing cost must be in (0, 1)");
  const double u1[2][2] = {{0.0, 1.0}, {-e, 1.0 - e}};
  const double u2[2][2] = {{0.0, -e}, {1.0, 1.0 - e}};
  return make_2x2(u1, u2, {"sleep", "active"});
}

FiniteGame cr_dilemma() {
  const double u1[2][2] = {{1.0, 4.0}, {0.0, 3.0}};
  const double u2[2][2] = {{1.0, 0.0}, {4.0, 3.0}};
  return make_2x2(u1, u2, {"wideband", "narrowband"});
}

FiniteGame aumann_coordination() {
  const double u1[2][2] = {{5.0, 0.0}, {4.0, 1.0}};
  const double u2[2][2] = {{1.0, 0.0}, {4.0, 5.0}};
  return make_2x2(u1, u2, {"first", "second"});
}

FiniteGame duck_foraging(int num_players, double rate_fast, double rate_slow) {
  if (num_players < 1) throw ValidationError("at least one player required");
  if (!(rate_fast > 0.0) || !(rate_slow > 0.0)) {
    throw ValidationError("feeding rates must be positive");
  }
  const double rates[2] = {rate_fast, rate_slow};
  auto payoff = [rates, num_players](int player, const PureProfile& s) {
    int occupancy = 0;
    for (int j = 0; j < num_players; ++j) {
      if (s[j] == s[player]) ++occupancy;
    }
    return rates[s[player]] / occupancy;
  };

  std::vector<int> counts(num_players, 2);
  if (num_players <= 20) {
    const std::uint64_t n = 1ULL << num_players;
    std::vector<double> payoffs(static_cast<std::size_t>(num_players) * n);
    for (std::uint64_t f = 0; f < n; ++f) {
      PureProfile s(num_players);
      for (int k = 0; k < num_players; ++k) {
        s[k] = static_cast<int>((f >> (num_players - 1 - k)) & 1);
      }
      for (int k = 0; k < num_players; ++k) {
        payoffs[static_cast<std::size_t>(k) * n + f] = payoff(k, s);
      }
    }
    FiniteGame game(counts, std::move(payoffs));
    game.action_labels =
        std::vector<std::vector<std::string>>(num_players, {"fast", "slow"});
    return game;
  }
  return FiniteGame::from_evaluator(counts, payoff);
}

ContinuousGame pa_game(const InterferenceChannel& channel) {
  channel.validate();
  ContinuousGame game;
  game.num_players = channel.num_tx;
  game.bounds.assign(channel.num_tx,
                     std::vector<std::pair<double, double>>(
                         channel.num_bands, {0.0, channel.budget}));
  game.utility = [channel](int k, const ContinuousGame::Profile& p) {
    double u = 0.0;
    for (int n = 0; n < channel.num_bands; ++n) {
      u += log2_safe(1.0 + channel.sinr(k, n, p));
    }
    return u;
  };
  game.best_response = [channel](int k, const ContinuousGame::Profile& p) {
    return waterfilling_best_response(channel, k, p);
  };
  return game;
}

FiniteGame bs_game(const InterferenceChannel& channel) {
  channel.validate();
  const int K = channel.num_tx;
  const int N = channel.num_bands;
  std::vector<int> counts(K, N);
  std::uint64_t cells = 1;
  for (int k = 0; k < K; ++k) cells *= N;

  std::vector<double> payoffs(static_cast<std::size_t>(K) * cells);
  std::vector<std::vector<double>> powers(K, std::vector<double>(N, 0.0));
  for (std::uint64_t f = 0; f < cells; ++f) {
    std::uint64_t rem = f;
    PureProfile s(K);
    for (int k = K - 1; k >= 0; --k) {
      s[k] = static_cast<int>(rem % N);
      rem /= N;
    }
    for (int k = 0; k < K; ++k) {
      std::fill(powers[k].begin(), powers[k].end(), 0.0);
      powers[k][s[k]] = channel.budget;
    }
    for (int k = 0; k < K; ++k) {
      double u = 0.0;
      for (int n = 0; n < N; ++n) u += log2_safe(1.0 + channel.sinr(k, n, powers));
      payoffs[static_cast<std::size_t>(k) * cells + f] = u;
    }
  }
  return FiniteGame(counts, std::move(payoffs));
}

std::vector<double> waterfilling_best_response(
    const InterferenceChannel& channel, int k,
    const std::vector<std::vector<double>>& others_powers) {
  channel.validate();
  validate_powers(channel, others_powers);
  const int N = channel.num_bands;

  // Effective inverse channel per band; bands with zero direct gain are
  // excluded from the allocation.
  std::vector<std::pair<double, int>> inv;  // (I_{k,n}, band)
  for (int n = 0; n < N; ++n) {
    const double direct = channel.gain(k, k, n);
    if (direct <= 0.0) continue;
    double interference = channel.noise;
    for (int l = 0; l < channel.num_tx; ++l) {
      if (l != k) interference += channel.gain(l, k, n) * others_powers[l][n];
    }
    inv.push_back({interference / direct, n});
  }
  if (inv.empty()) throw ValidationError("all bands have zero direct gain");

  // Exact water level over the m cheapest bands: w_m = (P + sum I_i) / m,
  // valid when w_m exceeds I_m and not I_{m+1}.
  std::sort(inv.begin(), inv.end());
  const int M = static_cast<int>(inv.size());
  double prefix = 0.0;
  double level = 0.0;
  int active = 0;
  for (int m = 1; m <= M; ++m) {
    prefix += inv[m - 1].first;
    const double w = (channel.budget + prefix) / m;
    if (m == M || w <= inv[m].first) {
      level = w;
      active = m;
      break;
    }
  }

  std::vector<double> p(N, 0.0);
  for (int i = 0; i < active; ++i) {
    p[inv[i].second] = level - inv[i].first;
  }
  return p;
}

double mac_potential(const InterferenceChannel& channel,
                     const std::vector<std::vector<double>>& powers) {
  channel.validate();
  if (channel.topology != ChannelTopology::kMac) {
    throw ValidationError("potential defined for the MAC topology only");
  }
  validate_powers(channel, powers);
  double phi = 0.0;
  for (int n = 0; n < channel.num_bands; ++n) {
    double total = channel.noise;
    for (int k = 0; k < channel.num_tx; ++k) {
      total += channel.gain(k, 0, n) * powers[k][n];
    }
    phi += log2_safe(total);
  }
  return phi;
}

SpectralRadiusResult spectral_radius_condition(const InterferenceChannel& channel) {
  channel.validate();
  if (channel.topology != ChannelTopology::kInterference) {
    throw ValidationError("condition defined for the interference topology");
  }
  const int K = channel.num_tx;
  SpectralRadiusResult out;
  out.holds = true;
  out.radii.assign(K, 0.0);

  for (int j = 0; j < K; ++j) {
    for (int n = 0; n < channel.num_bands; ++n) {
      // Ratios are taken against receiver j's own direct gain; the condition
      // then asks every interfering link into receiver j to be weaker than
      // the direct one.
      std::vector<std::vector<double>> h(K, std::vector<double>(K, 0.0));
      const double denom = channel.gain(j, j, n);
      bool degenerate = denom <= 0.0;
      for (int k = 0; k < K && !degenerate; ++k) {
        for (int l = 0; l < K; ++l) {
          if (l == k) continue;
          h[k][l] = channel.gain(l, j, n) / denom;
        }
      }
      if (degenerate) {
        out.holds = false;
        out.radii[j] = std::numeric_limits<double>::infinity();
        out.diagnostic = "zero direct gain makes the ratio matrix undefined";
        break;
      }

      // Power iteration on H + I. The shift makes the Perron root strictly
      // dominant (H may carry a -rho eigenvalue that stalls plain power
      // iteration); subtracting 1 recovers rho(H).
      std::vector<double> v(K, 1.0 / std::sqrt(static_cast<double>(K)));
      double shifted = 0.0;
      for (int it = 0; it < 200; ++it) {
        std::vector<double> w(K, 0.0);
        for (int r = 0; r < K; ++r) {
          w[r] = v[r];
          for (int c = 0; c < K; ++c) w[r] += h[r][c] * v[c];
        }
        double nrm = 0.0;
        for (double x : w) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-300) {
          shifted = 1.0;
          break;
        }
        const double prev = shifted;
        shifted = nrm;
        for (int r = 0; r < K; ++r) v[r] = w[r] / nrm;
        if (it > 0 && std::abs(shifted - prev) <= 1e-10) break;
      }
      out.radii[j] = std::max(out.radii[j], std::max(0.0, shifted - 1.0));
    }
    if (out.radii[j] >= 1.0) out.holds = false;
  }
  return out;
}

ContinuousGame energy_efficiency_game(int num_players, EfficiencyModel model,
                                      double param, double noise, double p_max,
                                      std::vector<double> pricing) {
  if (num_players < 1) throw ValidationError("at least one player required");
  if (!(param > 0.0)) throw ValidationError("efficiency parameter must be positive");
  if (!(noise > 0.0) || !(p_max > 0.0)) {
    throw ValidationError("noise power and power cap must be positive");
  }
  if (pricing.empty()) pricing.assign(num_players, 0.0);
  if (static_cast<int>(pricing.size()) != num_players) {
    throw ValidationError("one price per player required");
  }
  for (double c : pricing) {
    if (!(c >= 0.0)) throw ValidationError("prices must be non-negative");
  }

  const double p_min = 1e-6 * p_max;
  auto f = [model, param](double x) {
    return model == EfficiencyModel::kSigmoid
               ? std::pow(1.0 - std::exp(-x), param)
               : std::exp(-param / x);
  };

  ContinuousGame game;
  game.num_players = num_players;
  game.bounds.assign(
      num_players, std::vector<std::pair<double, double>>{{p_min, p_max}});
  game.utility = [f, noise, pricing](int k, const ContinuousGame::Profile& s) {
    double others = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (static_cast<int>(j) != k) others += s[j][0];
    }
    const double p = s[k][0];
    return f(p / (noise + others)) / p - pricing[k] * p;
  };
  game.best_response = [f, noise, pricing, p_min, p_max](
                           int k, const ContinuousGame::Profile& s) {
    double others = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (static_cast<int>(j) != k) others += s[j][0];
    }
    auto value = [&](double p) {
      return f(p / (noise + others)) / p - pricing[k] * p;
    };
    // Golden-section search; the objective is quasi-concave in own power.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = p_min, hi = p_max;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    for (int it = 0; it < 200; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + phi * (hi - lo);
        f2 = value(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - phi * (hi - lo);
        f1 = value(x1);
      }
    }
    double best = 0.5 * (lo + hi);
    double best_val = value(best);
    for (double endpoint : {p_min, p_max}) {
      if (value(endpoint) > best_val) {
        best = endpoint;
        best_val = value(endpoint);
      }
    }
    return std::vector<double>{best};
  };
  return game;
}

ContinuousGame cournot_duopoly() {
  ContinuousGame game;
  game.num_players = 2;
  game.bounds.assign(2, std::vector<std::pair<double, double>>{{0.0, 1.0}});
  game.utility = [](int k, const ContinuousGame::Profile& s) {
    return s[k][0] * (1.0 - s[0][0] - s[1][0]);
  };
  game.best_response = [](int k, const ContinuousGame::Profile& s) {
    const double q = std::clamp((1.0 - s[1 - k][0]) / 2.0, 0.0, 1.0);
    return std::vector<double>{q};
  };
  return game;
}

LinearSystemGame linear_system_game(const std::vector<std::vector<double>>& a,
                                    const std::vector<double>& y) {
  if (a.size() != 2 || a[0].size() != 2 || a[1].size() != 2 || y.size() != 2) {
    throw ValidationError("a 2x2 system is required");
  }
  if (a[0][0] == 0.0 || a[1][1] == 0.0) {
    throw ValidationError("diagonal coefficients must be non-zero");
  }

  static constexpr double kBox = 1e3;
  LinearSystemGame out;
  out.diagonally_dominant = std::abs(a[0][0]) > std::abs(a[0][1]) &&
                            std::abs(a[1][1]) > std::abs(a[1][0]);
  out.game.num_players = 2;
  out.game.bounds.assign(2, std::vector<std::pair<double, double>>{{-kBox, kBox}});
  out.game.utility = [a, y](int k, const ContinuousGame::Profile& s) {
    const double r = a[k][0] * s[0][0] + a[k][1] * s[1][0] - y[k];
    return -r * r;
  };
  out.game.best_response = [a, y](int k, const ContinuousGame::Profile& s) {
    const double x = (y[k] - a[k][1 - k] * s[1 - k][0]) / a[k][k];
    return std::vector<double>{std::clamp(x, -kBox, +kBox)};
  };
  return out;
}

ContinuousGame beamforming_game(const BeamformingInstance& instance) {
  instance.validate();
  const std::vector<Cx> mrt1 = normalized(instance.h11);
  const std::vector<Cx> mrt2 = normalized(instance.h22);
  const std::vector<Cx> zf1 = zero_forcing(instance.h11, instance.h12);
  const std::vector<Cx> zf2 = zero_forcing(instance.h22, instance.h21);
  const double p = instance.power;

  auto combine = [](const std::vector<Cx>& zf, const std::vector<Cx>& mrt,
                    double alpha) {
    std::vector<Cx> w(zf.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = alpha * zf[i] + (1.0 - alpha) * mrt[i];
    }
    return normalized(std::move(w));
  };

  ContinuousGame game;
  game.num_players = 2;
  game.bounds.assign(2, std::vector<std::pair<double, double>>{{0.0, 1.0}});
  game.utility = [instance, mrt1, mrt2, zf1, zf2, p, combine](
                     int k, const ContinuousGame::Profile& s) {
    const std::vector<Cx> w1 = combine(zf1, mrt1, s[0][0]);
    const std::vector<Cx> w2 = combine(zf2, mrt2, s[1][0]);
    const double sig1 = p * std::norm(inner(instance.h11, w1));
    const double sig2 = p * std::norm(inner(instance.h22, w2));
    const double cross_at_1 = p * std::norm(inner(instance.h21, w2));
    const double cross_at_2 = p * std::norm(inner(instance.h12, w1));
    const double sinr =
        k == 0 ? sig1 / (1.0 + cross_at_1) : sig2 / (1.0 + cross_at_2);
    return std::log(1.0 + sinr);
  };
  // Own weights appear only in the signal term, maximized by pure MRT.
  game.best_response = [](int, const ContinuousGame::Profile&) {
    return std::vector<double>{0.0};
  };
  return game;
}

BeamformingInstance random_beamforming_instance(int num_antennas, double power,
                                                std::uint64_t seed) {
  Rng rng(seed);
  auto gaussian = [&rng]() {
    const double u1 = std::max(rng.next_double(), 1e-12);
    const double u2 = rng.next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return Cx(r * std::cos(6.283185307179586 * u2),
              r * std::sin(6.283185307179586 * u2));
  };
  auto vec = [&](int n) {
    std::vector<Cx> v(n);
    for (Cx& x : v) x = gaussian();
    return v;
  };
  BeamformingInstance inst;
  inst.num_antennas = num_antennas;
  inst.power = power;
  inst.h11 = vec(num_antennas);
  inst.h12 = vec(num_antennas);
  inst.h21 = vec(num_antennas);
  inst.h22 = vec(num_antennas);
  inst.validate();
  return inst;
}

double ctd_value(const CTDNetwork& network, const std::vector<int>& coalition) {
  network.validate();
  if (coalition.empty()) return 0.0;
  double miss = 1.0, quiet = 1.0;
  for (int i : coalition) {
    if (i < 0 || i >= network.num_stations) {
      throw ValidationError("station index out of range");
    }
    miss *= 1.0 - network.detection[i];
    quiet *= 1.0 - network.false_alarm[i];
  }
  const double qd = 1.0 - miss;
  const double qf = 1.0 - quiet;
  return qf <= network.alpha ? qd : 0.0;
}

}  // namespace gte
