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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "golden_support.hpp"
#include "passage/bounds.hpp"
#include "passage/ensemble.hpp"
#include "passage/geometry.hpp"
#include "passage/rational.hpp"
#include "passage/solver.hpp"
#include "passage/state.hpp"
#include "test_support.hpp"

using namespace passage;
using passage::testing::dense_scan_min;
using passage::testing::uniform;
using passage::testing::uniform_int;

namespace {

// Collects failed checks for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

PassageOptions numeric_only() {
  PassageOptions o;
  o.exact_fast_paths = false;
  return o;
}

EnergyState family(const std::vector<double>& e) {
  const std::vector<double> p = {0.5, 0.25, 0.25};
  return from_probabilities(e, p);
}

EnergyState spin1() {
  const std::vector<double> e = {-1.0, 0.0, 1.0};
  const std::vector<Complex> c = {0.5, 1.0 / std::sqrt(2.0), 0.5};
  return make_state(e, c);
}

// Random weights on distinct integer levels in [0, top]. Half of the draws
// balance even and odd levels so that a(pi) = 0 and a passage exists.
EnergyState random_integer_state(std::mt19937_64& g, int levels, int top, bool balanced) {
  std::vector<double> e;
  while (static_cast<int>(e.size()) < levels) {
    const double k = uniform_int(g, 0, top);
    if (std::find(e.begin(), e.end(), k) == e.end()) e.push_back(k);
  }
  std::vector<double> p;
  for (int l = 0; l < levels; ++l) p.push_back(uniform(g, 0.05, 1.0));
  if (balanced) {
    if (std::all_of(e.begin(), e.end(), [&](double x) { return std::fmod(x, 2.0) == std::fmod(e[0], 2.0); })) {
      e[0] = e[0] + 1.0;
      while (std::count(e.begin(), e.end(), e[0]) > 1) e[0] += 2.0;
    }
    double even = 0.0, odd = 0.0;
    for (int l = 0; l < levels; ++l) (std::fmod(e[l], 2.0) == 0.0 ? even : odd) += p[l];
    for (int l = 0; l < levels; ++l) p[l] /= 2.0 * (std::fmod(e[l], 2.0) == 0.0 ? even : odd);
  }
  return from_probabilities(e, p);
}

void ac1(Criterion& c) {
  auto g = passage::testing::rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    const double lo = uniform(g, -5.0, 5.0);
    const double gap = uniform(g, 0.1, 10.0);
    const EnergyState s = equal_superposition(lo, lo + gap, uniform(g, 0.0, 2 * kPi));
    const PassageResult r = find_passage(s, numeric_only());
    c.expect(r.found && std::abs(*r.time - kPi / gap) <= 1e-8 * kPi / gap,
             "time for gap " + std::to_string(gap));
    c.expect(classify_attainment(r, bounds_report(s)) == Attainment::kAttainsFleming,
             "attainment for gap " + std::to_string(gap));
  }
}

void ac2(Criterion& c) {
  const EnergyState s = family({0.0, 1.0, 3.0});
  PassageOptions o;
  o.t_max = 10.0;
  for (const PassageOptions& opts : {o, numeric_only()}) {
    const PassageResult r = find_passage(s, opts);
    c.expect(r.found && std::abs(*r.time - kPi) <= 1e-9, "time pi");
    c.expect(r.fleming_ratio && std::abs(*r.fleming_ratio - 2.449489742783178) <= 1e-9,
             "ratio sqrt 6");
  }
  c.expect(!geodesic_check(s, kPi), "geodesic_check false");
  c.expect(std::abs(path_length(s, kPi, 10'000) - std::sqrt(6.0) * kPi) <= 1e-5, "path length");
}

void ac3(Criterion& c) {
  const EnergyState s = spin1();
  PassageOptions o;
  o.t_max = 10.0;
  for (const PassageOptions& opts : {o, numeric_only()}) {
    const PassageResult r = find_passage(s, opts);
    c.expect(r.found && std::abs(*r.time - kPi) <= 1e-9, "time pi");
    c.expect(r.fleming_ratio && std::abs(*r.fleming_ratio - std::sqrt(2.0)) <= 1e-9,
             "ratio sqrt 2");
  }
  const ProjectivePoint eta = evolve(s, kPi);
  const Complex expected[] = {-0.5, 1.0 / std::sqrt(2.0), -0.5};
  Complex overlap = 0.0;
  for (int l = 0; l < 3; ++l) overlap += std::conj(expected[l]) * eta.amplitudes[l];
  const Complex phase = overlap / std::abs(overlap);
  double worst = 0.0;
  for (int l = 0; l < 3; ++l) worst = std::max(worst, std::abs(eta.amplitudes[l] - phase * expected[l]));
  c.expect(worst <= 1e-12, "amplitudes at pi");
  c.expect(fs_distance(evolve(s, 2 * kPi), to_point(s)) < 1e-9, "cyclic after 2 pi");
}

void ac4(Criterion& c) {
  PassageOptions o;
  o.t_max = 2 * kPi;
  const PassageResult bad = find_passage(family({0.0, 1.0, 2.0}), o);
  c.expect(!bad.found, "(0,1,2) no passage");
  c.expect(std::abs(bad.window - 2 * kPi) <= 1e-12, "full period searched");
  const auto oracle = dense_scan_min({0.0, 1.0, 2.0}, {0.5, 0.25, 0.25}, 2 * kPi, 1'000'001);
  c.expect(std::abs(bad.residual - oracle.value) <= 1e-6, "residual against oracle");

  const PassageResult good = find_passage(family({0.0, 1.0, 3.0}), o);
  c.expect(good.found, "(0,1,3) passes");

  const std::vector<double> e012 = {0.0, 1.0, 2.0}, e013 = {0.0, 1.0, 3.0};
  c.expect(!analyze_spectrum(e012).odd_odd, "analyzer (0,1,2)");
  c.expect(analyze_spectrum(e013).odd_odd, "analyzer (0,1,3)");
}

void ac5(Criterion& c) {
  auto g = passage::testing::rng(1005);
  for (int trial = 0; trial < 200; ++trial) {
    const EnergyState s = equal_superposition(0.0, uniform(g, 0.05, 20.0));
    c.expect(std::abs(margolus_levitin_bound(s).value() - two_level_passage(s)) <=
                 1e-12 * two_level_passage(s),
             "grounded two-level equality");
  }
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const EnergyState base =
        random_integer_state(g, uniform_int(g, 2, 5), 9, trial % 2 == 0);
    const EnergyState s = base.scaled(uniform(g, 0.3, 3.0)).shifted(uniform(g, -10.0, 10.0));
    const PassageResult r = find_passage(s);
    if (!r.found) continue;
    ++found;
    const TimeBound ml = margolus_levitin_bound(s);
    c.expect(!ml.is_finite() || ml.value() <= *r.time + 1e-9, "ML below passage time");
  }
  c.expect(found >= 100, "enough passages sampled");
}

void ac6(Criterion& c) {
  auto g = passage::testing::rng(1006);
  int found = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const EnergyState s = random_integer_state(g, uniform_int(g, 2, 5), 12, trial % 2 == 0);
    const PassageResult r = find_passage(s);
    if (!r.found) continue;
    ++found;
    c.expect(*r.time >= fleming_bound(s).value() * (1 - 1e-9), "passage below Fleming");
  }
  c.expect(found >= 600, "enough passages sampled");
}

void ac7(Criterion& c) {
  auto g = passage::testing::rng(1007);
  const double delta = 1e-5;
  for (int trial = 0; trial < 100; ++trial) {
    const EnergyState s = passage::testing::random_state(g, 2 + trial % 5);
    const double t = uniform(g, 0.0, 20.0);
    const double speed = fs_distance(evolve(s, t), evolve(s, t + delta)) / delta;
    c.expect(std::abs(speed - aa_speed(s)) <= 1e-6, "finite-difference speed");
  }
  for (int trial = 0; trial < 20; ++trial) {
    const EnergyState s = passage::testing::random_state(g, 3 + trial % 3, -2.0, 2.0);
    const double t = uniform(g, 1.0, 3.0);
    const double exact = aa_speed(s) * t;
    const double e1 = exact - path_length(s, t, 101);
    const double e2 = exact - path_length(s, t, 201);
    const double e3 = exact - path_length(s, t, 401);
    c.expect(std::log2(e1 / e2) >= 1.9 && std::log2(e2 / e3) >= 1.9, "convergence order");
  }
}

void ac8(Criterion& c) {
  const auto pair = [](double w1, double w2) {
    return make_ensemble(
        {{0.5, equal_superposition(0.0, w1)}, {0.5, equal_superposition(0.0, w2)}});
  };
  const EnsemblePassage a = ensemble_passage_time(pair(1.0, 3.0));
  c.expect(a.time && *a.time == kPi, "(1,3) gives pi");
  const EnsemblePassage b = ensemble_passage_time(pair(2.0, 3.0));
  c.expect(!b.time && b.outcome == EnsembleOutcome::kParityObstruction, "(2,3) obstructed");

  auto g = passage::testing::rng(1008);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t w1 = 2 * uniform_int(g, 0, 9) + 1;
    const std::int64_t w2 = 2 * uniform_int(g, 0, 9) + 1;
    const EnsemblePassage exact =
        ensemble_passage_time(pair(static_cast<double>(w1), static_cast<double>(w2)));
    const auto brute = passage::testing::brute_force_odd_multiple({w1, w2}, 10'000);
    c.expect(brute.has_value() && exact.time.has_value(), "odd/odd pair has a time");
    if (!brute || !exact.time) continue;
    const double expected = kPi * static_cast<double>(*brute) / static_cast<double>(w1);
    c.expect(std::abs(*exact.time - expected) <= 1e-12 * expected, "matches brute force");
  }
}

void ac9(Criterion& c) {
  auto g = passage::testing::rng(1009);
  for (int trial = 0; trial < 100; ++trial) {
    const int members = uniform_int(g, 1, 4);
    std::vector<double> w;
    for (int m = 0; m < members; ++m) w.push_back(uniform(g, 0.1, 1.0));
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    std::vector<EnsembleMember> list;
    for (int m = 0; m < members; ++m) {
      const double lo = uniform(g, -3.0, 3.0);
      list.push_back({w[m] / total, equal_superposition(lo, lo + uniform(g, 0.1, 5.0),
                                                        uniform(g, 0.0, 2 * kPi))});
    }
    const DensityMatrix rho = density_matrix(make_ensemble(std::move(list)));
    const DensityMatrix later = evolve_density(rho, rho.levels, uniform(g, -100.0, 100.0));
    c.expect((later.entries.diagonal() - rho.entries.diagonal()).cwiseAbs().maxCoeff() <= 1e-14,
             "diagonal invariant");
    c.expect(later.hermiticity_error() <= 1e-12, "hermitian");
    c.expect(later.trace_error() <= 1e-12, "unit trace");
  }
}

void ac10(Criterion& c) {
  auto g = passage::testing::rng(1010);
  for (int trial = 0; trial < 100; ++trial) {
    const double lo = uniform(g, -5.0, 5.0);
    const EquatorConstruction eq = equator_construction(
        equal_superposition(lo, lo + uniform(g, 0.1, 10.0), uniform(g, 0.0, 2 * kPi)));
    c.expect(eq.lower_distance <= 1e-9 && eq.upper_distance <= 1e-9, "poles recovered");
  }
}

void ac11(Criterion& c) {
  const auto cases = passage::testing::golden_manifest();
  for (const char* spec : {"two_level.json", "three_level_sqrt6.json", "spin1.json",
                           "generic_012.json", "ensemble_13.json"}) {
    c.expect(std::any_of(cases.begin(), cases.end(),
                         [&](const auto& k) { return k.spec == spec; }),
             std::string("golden case for ") + spec);
  }
  for (const auto& k : cases) {
    const std::string why = passage::testing::check_golden(k);
    c.expect(why.empty(), k.command + " " + k.spec + ": " + why);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"AC1 two-level passage time and Fleming attainment", ac1},
      {"AC2 three-level sqrt 6 passage", ac2},
      {"AC3 spin-1 passage and cyclic evolution", ac3},
      {"AC4 odd/odd gate on (0,1,2) versus (0,1,3)", ac4},
      {"AC5 Margolus-Levitin equality and ordering", ac5},
      {"AC6 Fleming bound holds for random commensurate states", ac6},
      {"AC7 Anandan-Aharonov speed and path-length convergence", ac7},
      {"AC8 ensemble simultaneous passage", ac8},
      {"AC9 density-matrix diagonal invariance", ac9},
      {"AC10 equator construction", ac10},
      {"AC11 CLI golden files", ac11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %s\n", c.failures.empty() ? "PASS" : "FAIL", name.c_str());
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    if (!c.failures.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
