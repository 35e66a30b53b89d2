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

#include "passage/ensemble.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "passage/bounds.hpp"
#include "passage/error.hpp"

namespace passage {

std::string_view to_string(EnsembleOutcome outcome) {
  switch (outcome) {
    case EnsembleOutcome::kFound: return "found";
    case EnsembleOutcome::kParityObstruction: return "parity_obstruction";
    case EnsembleOutcome::kBeyondSearchBound: return "beyond_search_bound";
  }
  return "parity_obstruction";
}

Ensemble make_ensemble(std::vector<EnsembleMember> members) {
  if (members.empty()) throw Error(ErrorCode::kInvalidEnsemble, "ensemble has no members");
  double total = 0.0;
  for (std::size_t m = 0; m < members.size(); ++m) {
    const EnsembleMember& member = members[m];
    if (!(member.weight > 0.0) || member.weight > 1.0 + 1e-12) {
      throw Error(ErrorCode::kInvalidEnsemble,
                  "member " + std::to_string(m) + ": weight must lie in (0, 1]");
    }
    if (!is_equal_weight_two_level(member.state)) {
      throw Error(ErrorCode::kInvalidEnsemble,
                  "member " + std::to_string(m) +
                      ": not an equal-weight superposition of two levels");
    }
    if (member.state.hbar() != members.front().state.hbar()) {
      throw Error(ErrorCode::kInvalidEnsemble, "members disagree on hbar");
    }
    total += member.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidEnsemble,
                "weights sum to " + std::to_string(total) + ", expected 1");
  }
  for (EnsembleMember& member : members) member.weight /= total;

  Ensemble ensemble;
  ensemble.hbar_ = members.front().state.hbar();
  ensemble.members_ = std::move(members);
  return ensemble;
}

std::vector<double> Ensemble::frequencies() const {
  std::vector<double> out;
  out.reserve(members_.size());
  for (const EnsembleMember& m : members_) {
    const auto support = m.state.support();
    out.push_back(m.state.energies()[support[1]] - m.state.energies()[support[0]]);
  }
  return out;
}

double DensityMatrix::trace_error() const {
  return std::abs(entries.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::hermiticity_error() const {
  if (entries.size() == 0) return 0.0;
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

namespace {

std::size_t level_index(const std::vector<double>& levels, double energy) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (same_level(levels[i], energy)) return i;
  }
  throw Error(ErrorCode::kDimensionMismatch, "energy not present in the level basis");
}

}  // namespace

DensityMatrix density_matrix(const Ensemble& ensemble) {
  DensityMatrix rho;
  for (const EnsembleMember& m : ensemble.members()) {
    for (std::size_t l : m.state.support()) rho.levels.push_back(m.state.energies()[l]);
  }
  std::sort(rho.levels.begin(), rho.levels.end());
  rho.levels.erase(std::unique(rho.levels.begin(), rho.levels.end(), same_level),
                   rho.levels.end());

  const auto dim = static_cast<Eigen::Index>(rho.levels.size());
  rho.entries = Eigen::MatrixXcd::Zero(dim, dim);
  for (const EnsembleMember& m : ensemble.members()) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    for (std::size_t l : m.state.support()) {
      psi(static_cast<Eigen::Index>(level_index(rho.levels, m.state.energies()[l]))) +=
          m.state.amplitudes()[l];
    }
    rho.entries += m.weight * psi * psi.adjoint();
  }
  return rho;
}

DensityMatrix evolve_density(const DensityMatrix& rho, std::span<const double> energies,
                             double t, double hbar) {
  const auto dim = rho.entries.rows();
  if (rho.entries.cols() != dim || static_cast<Eigen::Index>(energies.size()) != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "density matrix is " + std::to_string(dim) + "-dimensional but " +
                    std::to_string(energies.size()) + " energies were given");
  }
  DensityMatrix out = rho;
  out.levels.assign(energies.begin(), energies.end());
  const double scale = t / hbar;
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index l = 0; l < dim; ++l) {
      if (k == l) continue;
      out.entries(k, l) = rho.entries(k, l) *
                          std::polar(1.0, (energies[static_cast<std::size_t>(k)] -
                                           energies[static_cast<std::size_t>(l)]) * scale);
    }
  }
  return out;
}

std::vector<double> verify_member_orthogonality(const Ensemble& ensemble, double t) {
  std::vector<double> overlaps;
  overlaps.reserve(ensemble.members().size());
  for (const EnsembleMember& m : ensemble.members()) {
    overlaps.push_back(std::abs(survival_amplitude(m.state, t)));
  }
  return overlaps;
}

EnsemblePassage ensemble_passage_time(const Ensemble& ensemble, const RationalOptions& opts,
                                      std::int64_t k_max) {
  const std::vector<double> freqs = ensemble.frequencies();
  const auto common = common_frequency(freqs, opts);
  if (!common) {
    throw Error(ErrorCode::kIncommensurateEnsemble,
                "member frequencies are not commensurate within the detection tolerance");
  }

  EnsemblePassage out;
  out.fundamental = common->fundamental;
  out.multiples = common->multiples;
  const bool all_odd = std::all_of(out.multiples.begin(), out.multiples.end(),
                                   [](std::int64_t a) { return a % 2 != 0; });
  if (!all_odd) {
    out.outcome = EnsembleOutcome::kParityObstruction;
    return out;
  }
  // With every multiple odd, t = pi hbar / g puts member m at k_m = a_m.
  if (*std::max_element(out.multiples.begin(), out.multiples.end()) > k_max) {
    out.outcome = EnsembleOutcome::kBeyondSearchBound;
    return out;
  }
  out.outcome = EnsembleOutcome::kFound;
  out.odd_multiples = out.multiples;
  out.time = kPi * ensemble.hbar() / common->fundamental;
  return out;
}

}  // namespace passage
