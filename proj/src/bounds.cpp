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

#include "passage/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "passage/error.hpp"

namespace passage {

bool is_equal_weight_two_level(const EnergyState& state, double tol) {
  const auto support = state.support();
  if (support.size() != 2) return false;
  const auto p = state.probabilities();
  return std::abs(p[support[0]] - 0.5) <= tol && std::abs(p[support[1]] - 0.5) <= tol;
}

namespace {

double two_level_gap(const EnergyState& state) {
  if (!is_equal_weight_two_level(state)) {
    throw Error(ErrorCode::kNotTwoLevelEqual,
                "state is not an equal-weight superposition of two levels; "
                "no closed-form passage time applies");
  }
  const auto support = state.support();
  return state.energies()[support[1]] - state.energies()[support[0]];
}

}  // namespace

TimeBound fleming_bound(const EnergyState& state) {
  const double dh = energy_dispersion(state);
  if (dh == 0.0) return TimeBound::unbounded();
  return TimeBound::finite(kPi * state.hbar() / (2.0 * dh));
}

double two_level_passage(const EnergyState& state) {
  return kPi * state.hbar() / two_level_gap(state);
}

double passage_time_family(const EnergyState& state, long long k) {
  const double gap = two_level_gap(state);
  if (k < 1 || k % 2 == 0) {
    throw Error(ErrorCode::kEvenK,
                "k must be an odd positive integer, got " + std::to_string(k));
  }
  return kPi * state.hbar() * static_cast<double>(k) / gap;
}

TimeBound margolus_levitin_bound(const EnergyState& state) {
  const auto energies = state.energies();
  const auto probabilities = state.probabilities();
  const double ground = *std::min_element(energies.begin(), energies.end());
  double mean = 0.0;
  for (std::size_t l = 0; l < energies.size(); ++l) {
    mean += probabilities[l] * (energies[l] - ground);
  }
  if (mean <= 0.0) return TimeBound::unbounded();
  return TimeBound::finite(kPi * state.hbar() / (2.0 * mean));
}

BoundsReport bounds_report(const EnergyState& state) {
  BoundsReport report;
  report.delta_h = energy_dispersion(state);
  report.fleming = fleming_bound(state);
  if (is_equal_weight_two_level(state)) report.delta_e_passage = two_level_passage(state);
  report.margolus_levitin = margolus_levitin_bound(state);
  if (report.fleming.is_finite() && report.margolus_levitin.is_finite()) {
    const double f = report.fleming.value();
    report.ml_never_sharper = report.margolus_levitin.value() <= f * (1.0 + 1e-12);
  }
  return report;
}

bool ml_never_sharper_than(const BoundsReport& report, double passage_time,
                           double slack) {
  if (!report.margolus_levitin.is_finite()) return true;
  return report.margolus_levitin.value() <= passage_time + slack;
}

}  // namespace passage
