// Copyright 2026 The Passage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "passage/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "passage/error.hpp"

namespace passage {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyState: return "EmptyState";
    case ErrorCode::kZeroNorm: return "ZeroNorm";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotTwoLevelEqual: return "NotTwoLevelEqual";
    case ErrorCode::kEvenK: return "EvenK";
    case ErrorCode::kEigenstateInput: return "EigenstateInput";
    case ErrorCode::kInvalidWindow: return "InvalidWindow";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kInvalidEnsemble: return "InvalidEnsemble";
    case ErrorCode::kIncommensurateEnsemble: return "IncommensurateEnsemble";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

bool same_level(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

EnergyState make_state(std::span<const double> energies,
                       std::span<const Complex> amplitudes, double hbar) {
  if (energies.empty() && amplitudes.empty()) {
    throw Error(ErrorCode::kEmptyState, "state has no energy levels");
  }
  if (energies.size() != amplitudes.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "got " + std::to_string(energies.size()) + " energies but " +
                    std::to_string(amplitudes.size()) + " amplitudes");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw Error(ErrorCode::kInvalidArgument, "hbar must be finite and positive");
  }
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (!std::isfinite(energies[i]) || !std::isfinite(amplitudes[i].real()) ||
        !std::isfinite(amplitudes[i].imag())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite value at level " + std::to_string(i));
    }
  }

  std::vector<std::size_t> order(energies.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });

  EnergyState state;
  state.hbar_ = hbar;
  // Runs of equal eigenvalues collapse into one level.
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && same_level(energies[order[i]], energies[order[j]])) ++j;
    if (j - i == 1) {
      state.energies_.push_back(energies[order[i]]);
      state.amplitudes_.push_back(amplitudes[order[i]]);
    } else {
      double weight = 0.0;
      double energy = 0.0;
      for (std::size_t k = i; k < j; ++k) {
        weight += std::norm(amplitudes[order[k]]);
        energy += energies[order[k]];
      }
      state.energies_.push_back(energy / static_cast<double>(j - i));
      state.amplitudes_.emplace_back(std::sqrt(weight), 0.0);
    }
    i = j;
  }

  double norm2 = 0.0;
  for (const Complex& c : state.amplitudes_) norm2 += std::norm(c);
  const double norm = std::sqrt(norm2);
  if (!(norm >= kZeroNormThreshold)) {
    throw Error(ErrorCode::kZeroNorm, "all amplitudes are (numerically) zero");
  }
  for (Complex& c : state.amplitudes_) c /= norm;
  state.probabilities_.reserve(state.amplitudes_.size());
  for (const Complex& c : state.amplitudes_) state.probabilities_.push_back(std::norm(c));
  return state;
}

EnergyState equal_superposition(double e_lower, double e_upper, double phase,
                                double hbar) {
  const double energies[] = {e_lower, e_upper};
  const Complex amplitudes[] = {Complex(1.0, 0.0), std::polar(1.0, phase)};
  return make_state(energies, amplitudes, hbar);
}

EnergyState from_probabilities(std::span<const double> energies,
                               std::span<const double> probabilities, double hbar) {
  std::vector<Complex> amplitudes;
  amplitudes.reserve(probabilities.size());
  for (double p : probabilities) {
    if (p < 0.0) throw Error(ErrorCode::kInvalidArgument, "negative probability");
    amplitudes.emplace_back(std::sqrt(p), 0.0);
  }
  return make_state(energies, amplitudes, hbar);
}

std::size_t EnergyState::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(probabilities_.begin(), probabilities_.end(),
                    [](double p) { return p > 0.0; }));
}

std::vector<std::size_t> EnergyState::support() const {
  std::vector<std::size_t> idx;
  for (std::size_t l = 0; l < probabilities_.size(); ++l) {
    if (probabilities_[l] > 0.0) idx.push_back(l);
  }
  return idx;
}

EnergyState EnergyState::restricted_to_support() const {
  EnergyState out;
  out.hbar_ = hbar_;
  for (std::size_t l : support()) {
    out.energies_.push_back(energies_[l]);
    out.amplitudes_.push_back(amplitudes_[l]);
    out.probabilities_.push_back(probabilities_[l]);
  }
  return out;
}

EnergyState EnergyState::shifted(double offset) const {
  std::vector<double> e(energies_.begin(), energies_.end());
  for (double& x : e) x += offset;
  return make_state(e, amplitudes_, hbar_);
}

EnergyState EnergyState::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  std::vector<double> e(energies_.begin(), energies_.end());
  for (double& x : e) x *= factor;
  return make_state(e, amplitudes_, hbar_);
}

Complex survival_amplitude(const EnergyState& state, double t) {
  const auto energies = state.energies();
  const auto probabilities = state.probabilities();
  const double scale = t / state.hbar();
  Complex sum{0.0, 0.0};
  for (std::size_t l = 0; l < energies.size(); ++l) {
    if (probabilities[l] == 0.0) continue;
    sum += std::polar(probabilities[l], -energies[l] * scale);
  }
  return sum;
}

SurvivalSample survival_sample(const EnergyState& state, double t) {
  SurvivalSample s;
  s.t = t;
  s.amplitude = survival_amplitude(state, t);
  s.probability = std::norm(s.amplitude);
  return s;
}

double energy_mean(const EnergyState& state) {
  const auto energies = state.energies();
  const auto probabilities = state.probabilities();
  double mean = 0.0;
  for (std::size_t l = 0; l < energies.size(); ++l) mean += probabilities[l] * energies[l];
  return mean;
}

double energy_dispersion(const EnergyState& state) {
  if (state.support_size() <= 1) return 0.0;
  const auto energies = state.energies();
  const auto probabilities = state.probabilities();
  // Central moments about the lowest occupied level first, then about the
  // mean; keeps the result insensitive to a large common offset.
  const double reference = energies[state.support().front()];
  double m1 = 0.0;
  for (std::size_t l = 0; l < energies.size(); ++l) {
    m1 += probabilities[l] * (energies[l] - reference);
  }
  double var = 0.0;
  for (std::size_t l = 0; l < energies.size(); ++l) {
    const double d = energies[l] - reference - m1;
    var += probabilities[l] * d * d;
  }
  return std::sqrt(std::max(0.0, var));
}

}  // namespace passage
