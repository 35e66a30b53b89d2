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

// Mixtures of equal-weight two-level states. A simultaneous passage time is
// a t > 0 at which every member sits at one of its own orthogonal instants,
// t = k_m pi hbar / omega_m with every k_m odd. Writing the member
// frequencies as omega_m = g a_m with gcd(a_m) = 1, such a t exists iff every
// a_m is odd, and then the earliest one is pi hbar / g (the LCM of the
// individual passage times). An even a_m is a parity obstruction: the
// members are never orthogonal together, however long one waits.

#ifndef PASSAGE_ENSEMBLE_HPP
#define PASSAGE_ENSEMBLE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "passage/rational.hpp"
#include "passage/state.hpp"

namespace passage {

struct EnsembleMember {
  double weight = 0.0;
  EnergyState state;
};

class Ensemble {
 public:
  std::span<const EnsembleMember> members() const { return members_; }
  double hbar() const { return hbar_; }
  /// omega_m = E_upper - E_lower per member.
  std::vector<double> frequencies() const;

 private:
  friend Ensemble make_ensemble(std::vector<EnsembleMember>);
  Ensemble() = default;
  std::vector<EnsembleMember> members_;
  double hbar_ = 1.0;
};

/// Weights must lie in (0, 1] and sum to 1 within 1e-9 (they are then
/// renormalised); every member must be an equal-weight two-level state and
/// all members must share hbar. Throws kInvalidEnsemble otherwise.
Ensemble make_ensemble(std::vector<EnsembleMember> members);

/// Density matrix in the basis of all levels used by any member, in
/// increasing energy order.
struct DensityMatrix {
  std::vector<double> levels;
  Eigen::MatrixXcd entries;

  double trace_error() const;        // |tr rho - 1|
  double hermiticity_error() const;  // max |rho - rho^dagger|
  double min_eigenvalue() const;
};

DensityMatrix density_matrix(const Ensemble& ensemble);

/// rho(t) = U^dagger(t) rho U(t), i.e. rho_kl exp(+i (E_k - E_l) t / hbar).
/// Diagonal entries are copied, not multiplied. Throws kDimensionMismatch.
DensityMatrix evolve_density(const DensityMatrix& rho, std::span<const double> energies,
                             double t, double hbar = 1.0);

/// |<psi_m(0)|psi_m(t)>| for each member.
std::vector<double> verify_member_orthogonality(const Ensemble& ensemble, double t);

enum class EnsembleOutcome { kFound, kParityObstruction, kBeyondSearchBound };
std::string_view to_string(EnsembleOutcome outcome);

struct EnsemblePassage {
  EnsembleOutcome outcome = EnsembleOutcome::kParityObstruction;
  std::optional<double> time;
  /// omega_m = fundamental * multiples[m].
  double fundamental = 0.0;
  std::vector<std::int64_t> multiples;
  /// Odd k_m with time = k_m pi hbar / omega_m; filled when found.
  std::vector<std::int64_t> odd_multiples;
};

/// Throws kIncommensurateEnsemble when a frequency ratio is not detected
/// within opts. Any required odd multiple above k_max reports
/// kBeyondSearchBound instead of a time.
EnsemblePassage ensemble_passage_time(const Ensemble& ensemble,
                                      const RationalOptions& opts = {},
                                      std::int64_t k_max = 10'000);

}  // namespace passage

#endif  // PASSAGE_ENSEMBLE_HPP
