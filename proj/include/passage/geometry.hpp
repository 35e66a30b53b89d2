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

// Fubini-Study geometry of rays, normalised so that orthogonal rays are a
// distance pi apart. Under unitary evolution a ray moves at the constant
// Anandan-Aharonov speed 2 Delta H / hbar, so the orbit length up to time t
// is 2 Delta H t / hbar and an orbit reaches an orthogonal ray no sooner
// than pi hbar / (2 Delta H); equality holds exactly on geodesics.

#ifndef PASSAGE_GEOMETRY_HPP
#define PASSAGE_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "passage/state.hpp"

namespace passage {

/// Representative of a ray; every operation below is invariant under
/// multiplication by a nonzero complex scalar.
struct ProjectivePoint {
  std::vector<Complex> amplitudes;
};

ProjectivePoint to_point(const EnergyState& state);
/// |E_index> in a basis of dimension `dim`.
ProjectivePoint basis_point(std::size_t dim, std::size_t index);

/// 2 arccos(|<x|y>| / (|x| |y|)) in [0, pi], evaluated as twice the angle
/// between phase-aligned unit vectors so it stays accurate for nearby rays.
/// Throws kZeroVector for a zero representative and kDimensionMismatch.
double fs_distance(const ProjectivePoint& x, const ProjectivePoint& y);

/// 2 Delta H / hbar.
double aa_speed(const EnergyState& state);

/// Amplitudes c_l exp(-i E_l t / hbar).
ProjectivePoint evolve(const EnergyState& state, double t);

/// Sum of Fubini-Study chords over n equally spaced samples of [0, t_end].
/// Converges to aa_speed * t_end at O(n^-2). Throws kInvalidWindow.
double path_length(const EnergyState& state, double t_end, std::size_t n);

struct GeodesicReport {
  double length = 0.0;    // orbit length on [0, t_end]
  double distance = 0.0;  // fs_distance(evolve(0), evolve(t_end))
  std::size_t samples = 0;
  bool geodesic = false;
};

/// Orbit length against endpoint distance, with the sample count doubled
/// until the estimated discretisation error is below tol / 10.
GeodesicReport geodesic_report(const EnergyState& state, double t_end, double tol);
bool geodesic_check(const EnergyState& state, double t_end, double tol = 1e-6);

/// Pole-equator picture for an equal-weight two-level state psi and its
/// passage image eta = U(tau) psi: for the right phase phi the rays
/// psi + e^{i phi} eta and psi - e^{i phi} eta are the lower and upper energy
/// eigenstates. phi is found by phase search over [0, 2 pi).
struct EquatorConstruction {
  double phase = 0.0;
  ProjectivePoint plus;
  ProjectivePoint minus;
  double lower_distance = 0.0;  // fs_distance(plus, |E_lower>)
  double upper_distance = 0.0;  // fs_distance(minus, |E_upper>)
};

/// Throws kNotTwoLevelEqual unless the state is equal-weight two-level.
EquatorConstruction equator_construction(const EnergyState& state);

}  // namespace passage

#endif  // PASSAGE_GEOMETRY_HPP
