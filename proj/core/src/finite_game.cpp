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

#include "gte/finite_game.hpp"

#include <cmath>
#include <limits>

namespace gte {

namespace {

std::uint64_t checked_profile_count(const std::vector<int>& counts) {
  if (counts.empty()) throw ValidationError("game needs at least one player");
  std::uint64_t p = 1;
  for (int n : counts) {
    if (n < 1) throw ValidationError("every player needs at least one action");
    p *= static_cast<std::uint64_t>(n);
    if (p > kMaxProfileCells) return 0;  // above dense cap
  }
  return p;
}

}  // namespace

FiniteGame::FiniteGame(std::vector<int> action_counts, std::vector<double> payoffs)
    : action_counts_(std::move(action_counts)), payoffs_(std::move(payoffs)) {
  profile_count_ = checked_profile_count(action_counts_);
  if (profile_count_ == 0) {
    throw CapacityError("dense payoff tensor exceeds 1e7 cells");
  }
  const std::uint64_t expected =
      profile_count_ * static_cast<std::uint64_t>(num_players());
  if (payoffs_.size() != expected) {
    throw ValidationError("payoff tensor has wrong size: expected " +
                          std::to_string(expected) + ", got " +
                          std::to_string(payoffs_.size()));
  }
  for (double u : payoffs_) {
    if (!std::isfinite(u)) throw ValidationError("payoff tensor contains non-finite value");
  }
}

FiniteGame FiniteGame::from_evaluator(std::vector<int> action_counts, PayoffFn fn) {
  FiniteGame g;
  g.action_counts_ = std::move(action_counts);
  g.evaluator_ = std::move(fn);
  g.profile_count_ = checked_profile_count(g.action_counts_);
  if (!g.evaluator_) throw ValidationError("payoff evaluator must be callable");
  return g;
}

std::uint64_t FiniteGame::profile_count() const {
  if (profile_count_ == 0) {
    throw CapacityError("profile space exceeds 1e7 cells; enumeration unavailable");
  }
  return profile_count_;
}

void FiniteGame::require_dense(const char* op) const {
  if (!is_dense()) {
    profile_count();  // throws when above cap
    throw CapacityError(std::string(op) + " requires dense payoff storage");
  }
}

double FiniteGame::payoff(int player, const PureProfile& profile) const {
  if (is_dense()) {
    return payoffs_[static_cast<std::uint64_t>(player) * profile_count_ +
                    flat_index(profile)];
  }
  return evaluator_(player, profile);
}

double FiniteGame::payoff_flat(int player, std::uint64_t flat) const {
  if (is_dense()) {
    return payoffs_[static_cast<std::uint64_t>(player) * profile_count_ + flat];
  }
  return evaluator_(player, unflatten(flat));
}

std::uint64_t FiniteGame::flat_index(const PureProfile& profile) const {
  validate_profile(profile);
  std::uint64_t idx = 0;
  for (int k = 0; k < num_players(); ++k) {
    idx = idx * static_cast<std::uint64_t>(action_counts_[k]) +
          static_cast<std::uint64_t>(profile[k]);
  }
  return idx;
}

PureProfile FiniteGame::unflatten(std::uint64_t flat) const {
  PureProfile p(num_players());
  for (int k = num_players() - 1; k >= 0; --k) {
    const auto n = static_cast<std::uint64_t>(action_counts_[k]);
    p[k] = static_cast<int>(flat % n);
    flat /= n;
  }
  return p;
}

void FiniteGame::validate_profile(const PureProfile& profile) const {
  if (static_cast<int>(profile.size()) != num_players()) {
    throw ValidationError("profile length does not match player count");
  }
  for (int k = 0; k < num_players(); ++k) {
    if (profile[k] < 0 || profile[k] >= action_counts_[k]) {
      throw ValidationError("action index out of range for player " + std::to_string(k));
    }
  }
}

MixedProfile::MixedProfile(std::vector<std::vector<double>> probs)
    : probs_(std::move(probs)) {
  validate();
}

MixedProfile MixedProfile::point_mass(const std::vector<int>& action_counts,
                                      const PureProfile& profile) {
  std::vector<std::vector<double>> p(action_counts.size());
  for (std::size_t k = 0; k < action_counts.size(); ++k) {
    p[k].assign(action_counts[k], 0.0);
    p[k][profile[k]] = 1.0;
  }
  return MixedProfile(std::move(p));
}

MixedProfile MixedProfile::uniform(const std::vector<int>& action_counts) {
  std::vector<std::vector<double>> p(action_counts.size());
  for (std::size_t k = 0; k < action_counts.size(); ++k) {
    p[k].assign(action_counts[k], 1.0 / action_counts[k]);
  }
  return MixedProfile(std::move(p));
}

void MixedProfile::validate(double tol) const {
  for (const auto& pi : probs_) {
    if (pi.empty()) throw ValidationError("empty strategy simplex");
    double sum = 0.0;
    for (double p : pi) {
      if (!(p >= 0.0)) throw ValidationError("negative probability in mixed strategy");
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw ValidationError("mixed strategy does not sum to 1");
    }
  }
}

void MixedProfile::validate_for(const FiniteGame& game, double tol) const {
  validate(tol);
  if (num_players() != game.num_players()) {
    throw ValidationError("mixed profile player count mismatch");
  }
  for (int k = 0; k < num_players(); ++k) {
    if (static_cast<int>(probs_[k].size()) != game.action_count(k)) {
      throw ValidationError("mixed strategy length mismatch for player " + std::to_string(k));
    }
  }
}

JointDistribution::JointDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  validate();
}

JointDistribution JointDistribution::point_mass(const FiniteGame& game,
                                                const PureProfile& profile) {
  std::vector<double> q(game.profile_count(), 0.0);
  q[game.flat_index(profile)] = 1.0;
  return JointDistribution(std::move(q));
}

JointDistribution JointDistribution::product(const FiniteGame& game,
                                             const MixedProfile& mixed) {
  mixed.validate_for(game);
  const std::uint64_t n = game.profile_count();
  std::vector<double> q(n);
  for (std::uint64_t f = 0; f < n; ++f) {
    const PureProfile s = game.unflatten(f);
    double p = 1.0;
    for (int k = 0; k < game.num_players(); ++k) p *= mixed.player(k)[s[k]];
    q[f] = p;
  }
  return JointDistribution(std::move(q));
}

void JointDistribution::validate(double tol) const {
  if (probs_.empty()) throw ValidationError("empty joint distribution");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw ValidationError("negative probability in joint distribution");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw ValidationError("joint distribution does not sum to 1");
  }
}

void JointDistribution::validate_for(const FiniteGame& game, double tol) const {
  validate(tol);
  if (probs_.size() != game.profile_count()) {
    throw ValidationError("joint distribution length does not match profile count");
  }
}

void ContinuousGame::validate() const {
  if (num_players < 1) throw ValidationError("game needs at least one player");
  if (static_cast<int>(bounds.size()) != num_players) {
    throw ValidationError("bounds must be given for every player");
  }
  for (const auto& box : bounds) {
    if (box.empty()) throw ValidationError("player action box is empty");
    for (auto [lo, hi] : box) {
      if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw ValidationError("action box bounds must be finite with lower <= upper");
      }
    }
  }
  if (!utility) throw ValidationError("utility evaluator is required");
}

void ContinuousGame::validate_profile(const Profile& s) const {
  if (static_cast<int>(s.size()) != num_players) {
    throw ValidationError("profile length does not match player count");
  }
  for (int k = 0; k < num_players; ++k) {
    if (s[k].size() != bounds[k].size()) {
      throw ValidationError("action dimension mismatch for player " + std::to_string(k));
    }
  }
}

}  // namespace gte
