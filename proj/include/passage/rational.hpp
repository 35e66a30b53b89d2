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

// Rational structure of a spectrum: which transition frequencies are
// commensurate, whether their ratios are odd/odd, and the period of the
// survival amplitude. Detection is numeric (continued fractions); everything
// after detection is exact integer arithmetic.

#ifndef PASSAGE_RATIONAL_HPP
#define PASSAGE_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "passage/state.hpp"

namespace passage {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct RationalOptions {
  double tol = 1e-9;
  std::int64_t max_den = 1'000'000;
};

/// First continued-fraction convergent p/q of x (> 0) with q <= max_den and
/// |q x - p| <= tol. Scaling the error by q keeps generic irrationals (pi,
/// sqrt 2, ...) from being accepted through their deep convergents; the
/// returned fraction always satisfies |x - p/q| <= tol as well.
std::optional<Fraction> approximate_rational(double x, double tol, std::int64_t max_den);

/// (2m - 1)/(2n - 1) representation of num/den, if the detected ratio has an
/// odd numerator and an odd denominator.
struct OddOddRatio {
  std::int64_t m = 1;
  std::int64_t n = 1;
};
std::optional<OddOddRatio> odd_odd_ratio(double omega_num, double omega_den, double tol,
                                         std::int64_t max_den);

/// Positive frequencies written as integer multiples of one fundamental:
/// omega_l = fundamental * multiples[l], with gcd(multiples) = 1.
struct CommonFrequency {
  double fundamental = 0.0;
  std::vector<std::int64_t> multiples;
};

/// Absent when some ratio is not detected or the integer lattice overflows.
std::optional<CommonFrequency> common_frequency(std::span<const double> frequencies,
                                                const RationalOptions& opts = {});

struct RationalStructure {
  /// omega_l = E_l - E_min for every level above the lowest one.
  std::vector<double> frequencies;
  /// omega_l / omega_first in lowest terms; absent when not detected.
  std::vector<std::optional<Fraction>> ratios;
  bool all_commensurate = false;
  /// 2 pi hbar / fundamental; only when all_commensurate.
  std::optional<double> period;
  std::optional<double> fundamental;
  /// All ratios detected and each one odd/odd.
  bool odd_odd = false;
};

RationalStructure analyze_spectrum(std::span<const double> energies, double hbar = 1.0,
                                   const RationalOptions& opts = {});

/// analyze_spectrum over the occupied levels of `state`.
RationalStructure analyze(const EnergyState& state, const RationalOptions& opts = {});

}  // namespace passage

#endif  // PASSAGE_RATIONAL_HPP
