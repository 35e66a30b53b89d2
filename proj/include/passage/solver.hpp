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

// First-orthogonality search: the earliest t > 0 with a(t) = 0.
//
// Closed forms are used where they exist (equal-weight two-level states and
// the symmetric 1/2, 1/4, 1/4 three-level family); everything else goes
// through a grid scan of |a(t)|^2 followed by Brent refinement of every
// bracketed local minimum. Commensurate spectra are searched over exactly one
// period of a(t), which decides the question; otherwise the result only
// speaks for the searched window.

#ifndef PASSAGE_SOLVER_HPP
#define PASSAGE_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "passage/bounds.hpp"
#include "passage/rational.hpp"
#include "passage/state.hpp"

namespace passage {

enum class PassageMethod { kExactTwoLevel, kExactSymmetric, kNumeric };
std::string_view to_string(PassageMethod method);

struct PassageOptions {
  /// Search window. Default: one period for commensurate spectra, otherwise
  /// 100 Fleming times. A commensurate spectrum never searches past a period.
  std::optional<double> t_max;
  /// |a| below this counts as orthogonal.
  double zero_tol = 1e-10;
  /// Allow the closed-form fast paths.
  bool exact_fast_paths = true;
  RationalOptions rational;
};

struct PassageResult {
  bool found = false;
  std::optional<double> time;
  /// |a(time)| when found, else the smallest |a| located in the window.
  double residual = 1.0;
  double min_location = 0.0;
  double window = 0.0;
  PassageMethod method = PassageMethod::kNumeric;
  /// time / Fleming bound; set when found and Delta H > 0.
  std::optional<double> fleming_ratio;
};

/// Throws kEigenstateInput for a single occupied level and kInvalidWindow
/// for a non-positive (or non-finite) t_max.
PassageResult find_passage(const EnergyState& state, const PassageOptions& opts = {});

/// The window find_passage would search with these options.
double default_window(const EnergyState& state, const PassageOptions& opts = {});

enum class Attainment { kAttainsFleming, kExceedsFleming, kNoPassage };
std::string_view to_string(Attainment attainment);

Attainment classify_attainment(const PassageResult& result, const BoundsReport& report,
                               double tol = 1e-6);

/// n equally spaced samples of a(t) on [0, t_max]. Throws kInvalidWindow for
/// t_max <= 0 or n < 2.
std::vector<SurvivalSample> survival_scan(const EnergyState& state, double t_max,
                                          std::size_t n);

}  // namespace passage

#endif  // PASSAGE_SOLVER_HPP
