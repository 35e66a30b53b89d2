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

#include "passage/geometry.hpp"

#include <cmath>

#include "passage/bounds.hpp"
#include "passage/error.hpp"
#include "passage/minimize.hpp"

namespace passage {

namespace {

double norm_of(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

ProjectivePoint to_point(const EnergyState& state) {
  return {std::vector<Complex>(state.amplitudes().begin(), state.amplitudes().end())};
}

ProjectivePoint basis_point(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorCode::kDimensionMismatch, "basis index out of range");
  ProjectivePoint p{std::vector<Complex>(dim, Complex{0.0, 0.0})};
  p.amplitudes[index] = 1.0;
  return p;
}

double fs_distance(const ProjectivePoint& x, const ProjectivePoint& y) {
  if (x.amplitudes.size() != y.amplitudes.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "rays live in different dimensions");
  }
  const double nx = norm_of(x.amplitudes);
  const double ny = norm_of(y.amplitudes);
  if (!(nx > 0.0) || !(ny > 0.0)) throw Error(ErrorCode::kZeroVector, "zero vector has no ray");

  Complex overlap{0.0, 0.0};
  for (std::size_t i = 0; i < x.amplitudes.size(); ++i) {
    overlap += std::conj(x.amplitudes[i] / nx) * (y.amplitudes[i] / ny);
  }
  // Rotate y so that <x|y> is real and non-negative, then measure the angle
  // between the unit vectors from the chord lengths |u - v| and |u + v|.
  const double mod = std::abs(overlap);
  const Complex align = mod > 0.0 ? std::conj(overlap) / mod : Complex{1.0, 0.0};
  double diff2 = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < x.amplitudes.size(); ++i) {
    const Complex u = x.amplitudes[i] / nx;
    const Complex v = y.amplitudes[i] / ny * align;
    diff2 += std::norm(u - v);
    sum2 += std::norm(u + v);
  }
  const double angle = 2.0 * std::atan2(std::sqrt(diff2), std::sqrt(sum2));
  return std::min(kPi, std::max(0.0, 2.0 * angle));
}

double aa_speed(const EnergyState& state) {
  return 2.0 * energy_dispersion(state) / state.hbar();
}

ProjectivePoint evolve(const EnergyState& state, double t) {
  const auto e = state.energies();
  const auto c = state.amplitudes();
  ProjectivePoint p{std::vector<Complex>(c.size())};
  const double scale = t / state.hbar();
  for (std::size_t l = 0; l < c.size(); ++l) p.amplitudes[l] = c[l] * std::polar(1.0, -e[l] * scale);
  return p;
}

double path_length(const EnergyState& state, double t_end, std::size_t n) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw Error(ErrorCode::kInvalidWindow, "t_end must be finite and positive");
  }
  if (n < 2) throw Error(ErrorCode::kInvalidWindow, "need at least two samples");
  const double intervals = static_cast<double>(n - 1);
  double length = 0.0;
  ProjectivePoint previous = evolve(state, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double t = (k + 1 == n) ? t_end : t_end * static_cast<double>(k) / intervals;
    ProjectivePoint current = evolve(state, t);
    length += fs_distance(previous, current);
    previous = std::move(current);
  }
  return length;
}

GeodesicReport geodesic_report(const EnergyState& state, double t_end, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be positive");
  constexpr std::size_t kMaxIntervals = std::size_t{1} << 22;
  GeodesicReport report;
  report.distance = fs_distance(evolve(state, 0.0), evolve(state, t_end));

  std::size_t intervals = 64;
  double coarse = path_length(state, t_end, intervals + 1);
  double fine = coarse;
  while (true) {
    intervals *= 2;
    fine = path_length(state, t_end, intervals + 1);
    // Chord sums have error ~ C h^2, so halving h leaves (fine - coarse)/3.
    const double error_estimate = std::abs(fine - coarse) / 3.0;
    if (error_estimate < tol / 10.0 || intervals >= kMaxIntervals) break;
    coarse = fine;
  }
  report.length = fine;
  report.samples = intervals + 1;
  report.geodesic = std::abs(report.length - report.distance) < tol;
  return report;
}

bool geodesic_check(const EnergyState& state, double t_end, double tol) {
  return geodesic_report(state, t_end, tol).geodesic;
}

EquatorConstruction equator_construction(const EnergyState& state) {
  const double tau = two_level_passage(state);  // validates the form
  const auto support = state.support();
  const std::size_t dim = state.size();
  const ProjectivePoint psi = to_point(state);
  const ProjectivePoint eta = evolve(state, tau);
  const ProjectivePoint lower = basis_point(dim, support[0]);
  const ProjectivePoint upper = basis_point(dim, support[1]);

  const auto combine = [&](double phase, double sign) {
    ProjectivePoint p{std::vector<Complex>(dim)};
    const Complex rot = std::polar(1.0, phase) * sign;
    for (std::size_t l = 0; l < dim; ++l) {
      p.amplitudes[l] = (psi.amplitudes[l] + rot * eta.amplitudes[l]) / std::sqrt(2.0);
    }
    return p;
  };
  const auto deficit = [&](double phase) {
    return fs_distance(combine(phase, 1.0), lower) + fs_distance(combine(phase, -1.0), upper);
  };

  // Coarse scan locates the basin, golden section polishes inside it.
  constexpr int kCoarse = 64;
  const double h = 2.0 * kPi / kCoarse;
  double best_phase = 0.0;
  double best = deficit(0.0);
  for (int j = 1; j < kCoarse; ++j) {
    const double d = deficit(h * j);
    if (d < best) {
      best = d;
      best_phase = h * j;
    }
  }
  const ScalarMinimum m =
      golden_section_minimize(deficit, best_phase - h, best_phase + h, 1e-15);

  EquatorConstruction out;
  out.phase = std::fmod(m.x, 2.0 * kPi);
  if (out.phase < 0.0) out.phase += 2.0 * kPi;
  out.plus = combine(out.phase, 1.0);
  out.minus = combine(out.phase, -1.0);
  out.lower_distance = fs_distance(out.plus, lower);
  out.upper_distance = fs_distance(out.minus, upper);
  return out;
}

}  // namespace passage
