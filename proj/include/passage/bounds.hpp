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

// Closed-form time bounds for reaching an orthogonal state:
//
//   Fleming             pi hbar / (2 Delta H)
//   two-level passage   pi hbar k / Delta E,   k = 1, 3, 5, ...
//   Margolus-Levitin    pi hbar / (2 <H>), spectrum shifted so min E_l = 0

#ifndef PASSAGE_BOUNDS_HPP
#define PASSAGE_BOUNDS_HPP

#include <optional>

#include "passage/state.hpp"

namespace passage {

/// |p - 1/2| tolerance used to recognise the equal-weight two-level form.
inline constexpr double kEqualWeightTolerance = 1e-9;

/// A time that is either finite or explicitly unbounded (an eigenstate never
/// leaves its ray). Never encoded as a floating overflow.
class TimeBound {
 public:
  static TimeBound finite(double t) { return TimeBound(t); }
  static TimeBound unbounded() { return TimeBound(); }

  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  double value() const { return *value_; }

  friend bool operator==(const TimeBound&, const TimeBound&) = default;

 private:
  TimeBound() = default;
  explicit TimeBound(double t) : value_(t) {}
  std::optional<double> value_;
};

struct BoundsReport {
  double delta_h = 0.0;
  TimeBound fleming = TimeBound::unbounded();
  /// Present only for equal-weight two-level states.
  std::optional<double> delta_e_passage;
  TimeBound margolus_levitin = TimeBound::unbounded();
  /// Margolus-Levitin <= Fleming when both are finite; vacuously true otherwise.
  bool ml_never_sharper = true;
};

/// True when exactly two levels are occupied, each with weight 1/2 +- tol.
bool is_equal_weight_two_level(const EnergyState& state,
                               double tol = kEqualWeightTolerance);

TimeBound fleming_bound(const EnergyState& state);

/// pi hbar / (E_upper - E_lower). Throws kNotTwoLevelEqual unless
/// is_equal_weight_two_level(state).
double two_level_passage(const EnergyState& state);

/// pi hbar k / Delta E, the k-th orthogonal instant of an equal-weight
/// two-level state. Throws kNotTwoLevelEqual, or kEvenK for k even or < 1.
double passage_time_family(const EnergyState& state, long long k);

TimeBound margolus_levitin_bound(const EnergyState& state);

BoundsReport bounds_report(const EnergyState& state);

/// Margolus-Levitin compared against a passage time produced by the solver.
bool ml_never_sharper_than(const BoundsReport& report, double passage_time,
                           double slack = 1e-9);

}  // namespace passage

#endif  // PASSAGE_BOUNDS_HPP
