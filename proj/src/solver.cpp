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

#include "passage/solver.hpp"

#include <algorithm>
#include <cmath>

#include "passage/error.hpp"
#include "passage/minimize.hpp"

namespace passage {

std::string_view to_string(PassageMethod method) {
  switch (method) {
    case PassageMethod::kExactTwoLevel: return "exact_two_level";
    case PassageMethod::kExactSymmetric: return "exact_symmetric";
    case PassageMethod::kNumeric: return "numeric";
  }
  return "numeric";
}

std::string_view to_string(Attainment attainment) {
  switch (attainment) {
    case Attainment::kAttainsFleming: return "attains_fleming";
    case Attainment::kExceedsFleming: return "exceeds_fleming";
    case Attainment::kNoPassage: return "no_passage";
  }
  return "no_passage";
}

namespace {

// Samples per fastest oscillation period of |a|^2 is 16.
constexpr double kGridDivisor = 8.0;
// Upper limit on grid samples; longer windows are truncated and reported.
constexpr double kMaxGridPoints = 1e8;

double spectral_width(const EnergyState& state) {
  const auto support = state.support();
  return state.energies()[support.back()] - state.energies()[support.front()];
}

double grid_step(const EnergyState& state) {
  return kPi * state.hbar() / (kGridDivisor * spectral_width(state));
}

void validate(const EnergyState& state, const PassageOptions& opts) {
  if (state.support_size() < 2) {
    throw Error(ErrorCode::kEigenstateInput,
                "state occupies a single energy level; a(t) has unit modulus forever");
  }
  if (opts.t_max && (!(*opts.t_max > 0.0) || !std::isfinite(*opts.t_max))) {
    throw Error(ErrorCode::kInvalidWindow, "t_max must be finite and positive");
  }
  if (!(opts.zero_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "zero_tol must be positive");
  }
}

double resolve_window(const EnergyState& state, const PassageOptions& opts,
                      const RationalStructure& structure) {
  double window = 0.0;
  if (structure.period) {
    window = opts.t_max ? std::min(*opts.t_max, *structure.period) : *structure.period;
  } else {
    window = opts.t_max ? *opts.t_max : 100.0 * fleming_bound(state).value();
  }
  return std::min(window, kMaxGridPoints * grid_step(state));
}

// Accepts a closed-form candidate only if it lies in the window and really is
// a zero of a(t) at the requested tolerance.
std::optional<PassageResult> accept_exact(const EnergyState& state, double time,
                                          double window, double zero_tol,
                                          PassageMethod method) {
  if (!(time > 0.0) || time > window * (1.0 + 1e-12)) return std::nullopt;
  const double residual = std::abs(survival_amplitude(state, time));
  if (!(residual < zero_tol)) return std::nullopt;
  PassageResult r;
  r.found = true;
  r.time = time;
  r.residual = residual;
  r.min_location = time;
  r.window = window;
  r.method = method;
  return r;
}

// One level at weight 1/2 and two at 1/4: a(t) vanishes iff both relative
// phases reach -1 together, i.e. both gaps to the heavy level are odd
// multiples of pi hbar / t.
std::optional<double> symmetric_family_time(const EnergyState& state,
                                            const RationalOptions& rational) {
  const auto support = state.support();
  if (support.size() != 3) return std::nullopt;
  const auto p = state.probabilities();
  const auto e = state.energies();
  for (std::size_t heavy = 0; heavy < 3; ++heavy) {
    if (std::abs(p[support[heavy]] - 0.5) > kEqualWeightTolerance) continue;
    std::size_t light[2];
    std::size_t n = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != heavy) light[n++] = support[j];
    }
    if (std::abs(p[light[0]] - 0.25) > kEqualWeightTolerance ||
        std::abs(p[light[1]] - 0.25) > kEqualWeightTolerance) {
      return std::nullopt;
    }
    const double gap_a = std::abs(e[light[0]] - e[support[heavy]]);
    const double gap_b = std::abs(e[light[1]] - e[support[heavy]]);
    const auto ratio = approximate_rational(gap_b / gap_a, rational.tol, rational.max_den);
    if (!ratio || ratio->num % 2 == 0 || ratio->den % 2 == 0) return std::nullopt;
    return kPi * state.hbar() * static_cast<double>(ratio->den) / gap_a;
  }
  return std::nullopt;
}

// |da/dt| with energies measured from the lowest occupied level; differs from
// the true derivative modulus by at most E_min |a| / hbar.
double derivative_modulus(const EnergyState& state, double t) {
  const auto e = state.energies();
  const auto p = state.probabilities();
  const auto support = state.support();
  const double base = e[support.front()];
  Complex sum{0.0, 0.0};
  for (std::size_t l : support) {
    const double w = (e[l] - base) / state.hbar();
    sum += p[l] * w * std::polar(1.0, -w * t);
  }
  return std::abs(sum);
}

PassageResult numeric_search(const EnergyState& state, double window, double zero_tol) {
  const double target_step = grid_step(state);
  const auto n = static_cast<std::size_t>(
      std::max(16.0, std::ceil(window / target_step - 1e-9)));
  const double step = window / static_cast<double>(n);

  std::vector<double> prob(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    prob[k] = std::norm(survival_amplitude(state, step * static_cast<double>(k)));
  }

  const auto modulus = [&](double t) { return std::abs(survival_amplitude(state, t)); };

  PassageResult result;
  result.window = window;
  result.method = PassageMethod::kNumeric;
  result.residual = 1.0;
  result.min_location = 0.0;

  for (std::size_t k = 1; k <= n; ++k) {
    const bool left = prob[k] < prob[k - 1];
    const bool right = (k == n) || prob[k] <= prob[k + 1];
    if (!left || !right) continue;

    const double lo = step * static_cast<double>(k - 1);
    const double hi = (k == n) ? window : step * static_cast<double>(k + 1);
    const double t_grid = step * static_cast<double>(k);
    ScalarMinimum m = brent_minimize(modulus, lo, hi, t_grid, 1e-14);
    const double grid_value = std::sqrt(prob[k]);
    if (grid_value < m.fx) m = {t_grid, grid_value, m.iterations};

    if (m.fx < result.residual) {
      result.residual = m.fx;
      result.min_location = m.x;
    }
    if (m.fx < zero_tol) {
      // A tangential zero (|a| ~ (t - t*)^2) pins t* only to sqrt(eps) from
      // |a|; the derivative has a simple root there, so refine on |a'|.
      const double slope_scale = spectral_width(state) / state.hbar();
      if (derivative_modulus(state, m.x) < std::sqrt(zero_tol) * slope_scale) {
        const auto slope = [&](double t) { return derivative_modulus(state, t); };
        const ScalarMinimum d = brent_minimize(slope, std::max(lo, m.x - step),
                                               std::min(hi, m.x + step), m.x, 1e-15);
        const double fx = modulus(d.x);
        if (fx < zero_tol) m = {d.x, fx, m.iterations + d.iterations};
      }
      result.found = true;
      result.time = m.x;
      result.residual = m.fx;
      result.min_location = m.x;
      return result;
    }
  }
  return result;
}

}  // namespace

double default_window(const EnergyState& state, const PassageOptions& opts) {
  validate(state, opts);
  return resolve_window(state, opts, analyze(state, opts.rational));
}

PassageResult find_passage(const EnergyState& state, const PassageOptions& opts) {
  validate(state, opts);
  const RationalStructure structure = analyze(state, opts.rational);
  const double window = resolve_window(state, opts, structure);
  const TimeBound fleming = fleming_bound(state);

  std::optional<PassageResult> result;
  if (opts.exact_fast_paths) {
    if (is_equal_weight_two_level(state)) {
      result = accept_exact(state, two_level_passage(state), window, opts.zero_tol,
                            PassageMethod::kExactTwoLevel);
    } else if (const auto t = symmetric_family_time(state, opts.rational)) {
      result = accept_exact(state, *t, window, opts.zero_tol,
                            PassageMethod::kExactSymmetric);
    }
  }
  if (!result) result = numeric_search(state, window, opts.zero_tol);

  if (result->found && fleming.is_finite()) {
    result->fleming_ratio = *result->time / fleming.value();
  }
  return *result;
}

Attainment classify_attainment(const PassageResult& result, const BoundsReport& report,
                               double tol) {
  if (!result.found || !result.time || !report.fleming.is_finite()) {
    return Attainment::kNoPassage;
  }
  const double ratio = *result.time / report.fleming.value();
  if (std::abs(ratio - 1.0) < tol) return Attainment::kAttainsFleming;
  if (ratio > 1.0 + tol) return Attainment::kExceedsFleming;
  return Attainment::kNoPassage;
}

std::vector<SurvivalSample> survival_scan(const EnergyState& state, double t_max,
                                          std::size_t n) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::kInvalidWindow, "t_max must be finite and positive");
  }
  if (n < 2) throw Error(ErrorCode::kInvalidWindow, "need at least two samples");
  std::vector<SurvivalSample> samples;
  samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = (k + 1 == n) ? t_max
                                  : t_max * static_cast<double>(k) / static_cast<double>(n - 1);
    samples.push_back(survival_sample(state, t));
  }
  return samples;
}

}  // namespace passage
