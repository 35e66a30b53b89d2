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

// Pure states expanded in the energy eigenbasis, and the survival amplitude
//
//   a(t) = <psi(0)|psi(t)> = sum_l p_l exp(-i E_l t / hbar),   p_l = |c_l|^2
//
// together with the first two energy moments. Everything downstream (bounds,
// passage search, geometry, ensembles) is built on these few functions.

#ifndef PASSAGE_STATE_HPP
#define PASSAGE_STATE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace passage {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Tolerance on sum_l |c_l|^2 after construction.
inline constexpr double kNormalizationTolerance = 1e-12;
/// Inputs whose norm falls below this are rejected as ZeroNorm.
inline constexpr double kZeroNormThreshold = 1e-9;

/// Two eigenvalues closer than this (relative to max(1, |E|)) are one level.
bool same_level(double a, double b);

class EnergyState {
 public:
  std::span<const double> energies() const { return energies_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<const double> probabilities() const { return probabilities_; }
  double hbar() const { return hbar_; }
  std::size_t size() const { return energies_.size(); }

  /// Number of levels carrying nonzero probability.
  std::size_t support_size() const;
  /// Indices of the levels carrying nonzero probability, in energy order.
  std::vector<std::size_t> support() const;

  /// The same state restricted to its support (zero-weight levels dropped).
  EnergyState restricted_to_support() const;
  /// Copy with every energy shifted by `offset`.
  EnergyState shifted(double offset) const;
  /// Copy with every energy multiplied by `factor` (> 0).
  EnergyState scaled(double factor) const;

 private:
  friend EnergyState make_state(std::span<const double>, std::span<const Complex>,
                                double);
  EnergyState() = default;

  std::vector<double> energies_;
  std::vector<Complex> amplitudes_;
  std::vector<double> probabilities_;
  double hbar_ = 1.0;
};

/// Builds a normalized state: levels are sorted by energy, degenerate levels
/// are merged (weights summed, amplitude = sqrt of the summed weight) and the
/// amplitudes are rescaled to unit norm.
///
/// Throws Error with kEmptyState, kLengthMismatch, kZeroNorm or
/// kInvalidArgument (non-finite input, hbar <= 0).
EnergyState make_state(std::span<const double> energies,
                       std::span<const Complex> amplitudes, double hbar = 1.0);

/// (|E_lower> + e^{i phase}|E_upper>)/sqrt(2).
EnergyState equal_superposition(double e_lower, double e_upper, double phase = 0.0,
                                double hbar = 1.0);

/// State with the given level weights and zero phases.
EnergyState from_probabilities(std::span<const double> energies,
                               std::span<const double> probabilities,
                               double hbar = 1.0);

struct SurvivalSample {
  double t = 0.0;
  Complex amplitude{1.0, 0.0};
  double probability = 1.0;  // |amplitude|^2
};

Complex survival_amplitude(const EnergyState& state, double t);
SurvivalSample survival_sample(const EnergyState& state, double t);

double energy_mean(const EnergyState& state);
/// Delta H = sqrt(<(H - <H>)^2>). Exactly zero for a single occupied level.
double energy_dispersion(const EnergyState& state);

}  // namespace passage

#endif  // PASSAGE_STATE_HPP
