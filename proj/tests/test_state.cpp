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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "passage/error.hpp"
#include "passage/state.hpp"
#include "test_support.hpp"

using namespace passage;
using passage::testing::random_state;
using passage::testing::uniform;

namespace {

EnergyState spin1() {
  const std::vector<double> e = {-1.0, 0.0, 1.0};
  const std::vector<Complex> c = {0.5, 1.0 / std::sqrt(2.0), 0.5};
  return make_state(e, c);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected passage::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("make_state normalizes") {
  const std::vector<double> e = {0.0, 1.0};
  const std::vector<Complex> c = {1.0, 1.0};
  const EnergyState s = make_state(e, c);
  CHECK(s.probabilities()[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.probabilities()[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("make_state keeps the spin-1 weights") {
  const EnergyState s = spin1();
  REQUIRE(s.size() == 3);
  CHECK(s.probabilities()[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(s.probabilities()[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.probabilities()[2] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("make_state merges degenerate levels and sorts") {
  const std::vector<double> e = {2.0, 1.0, 1.0};
  const std::vector<Complex> c = {0.0, 1.0, Complex(0.0, 1.0)};
  const EnergyState s = make_state(e, c);
  REQUIRE(s.size() == 2);
  CHECK(s.energies()[0] == 1.0);
  CHECK(s.energies()[1] == 2.0);
  CHECK(s.probabilities()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.probabilities()[1] == 0.0);
  CHECK(s.support_size() == 1);
}

TEST_CASE("make_state errors") {
  const std::vector<double> none;
  const std::vector<Complex> no_amps;
  CHECK(code_of([&] { make_state(none, no_amps); }) == ErrorCode::kEmptyState);

  const std::vector<double> e = {0.0, 1.0};
  const std::vector<Complex> zeros = {0.0, 1e-12};
  CHECK(code_of([&] { make_state(e, zeros); }) == ErrorCode::kZeroNorm);

  const std::vector<Complex> one = {1.0};
  CHECK(code_of([&] { make_state(e, one); }) == ErrorCode::kLengthMismatch);

  const std::vector<Complex> ok = {1.0, 1.0};
  CHECK(code_of([&] { make_state(e, ok, 0.0); }) == ErrorCode::kInvalidArgument);
  const std::vector<double> bad = {0.0, NAN};
  CHECK(code_of([&] { make_state(bad, ok); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("survival amplitude examples") {
  const EnergyState two = equal_superposition(0.0, 1.0);
  CHECK(std::abs(survival_amplitude(two, kPi)) < 1e-12);
  CHECK(survival_amplitude(two, 0.0).real() == doctest::Approx(1.0).epsilon(1e-15));

  // (1 + cos t) / 2 for weights (1/4, 1/2, 1/4) on (-1, 0, 1).
  const Complex a = survival_amplitude(spin1(), kPi / 2);
  CHECK(a.real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(a.imag()) < 1e-15);

  const SurvivalSample s = survival_sample(spin1(), 1.3);
  CHECK(s.probability == std::norm(s.amplitude));
}

TEST_CASE("hbar rescales time") {
  const EnergyState s = equal_superposition(0.0, 1.0, 0.0, 2.0);
  CHECK(std::abs(survival_amplitude(s, 2.0 * kPi)) < 1e-12);
}

TEST_CASE("energy moments") {
  CHECK(energy_mean(equal_superposition(0.0, 1.0)) == doctest::Approx(0.5));
  CHECK(std::abs(energy_mean(spin1())) < 1e-15);

  const std::vector<double> e = {0.0, 1.0, 3.0};
  const std::vector<double> p = {0.5, 0.25, 0.25};
  CHECK(energy_mean(from_probabilities(e, p)) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(energy_dispersion(equal_superposition(2.0, 7.0)) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(energy_dispersion(spin1()) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const double omega = 1.7;
  const std::vector<double> e3 = {0.0, omega, 3.0 * omega};
  CHECK(energy_dispersion(from_probabilities(e3, p)) ==
        doctest::Approx(omega * std::sqrt(1.5)).epsilon(1e-14));

  const std::vector<double> single = {4.2};
  const std::vector<Complex> amp = {Complex(0.3, 0.4)};
  CHECK(energy_dispersion(make_state(single, amp)) == 0.0);
}

TEST_CASE("property: survival amplitude invariants") {
  auto g = passage::testing::rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const EnergyState s = random_state(g, 1 + trial % 6);
    const double t = uniform(g, -50.0, 50.0);
    const Complex a = survival_amplitude(s, t);
    CHECK(std::abs(a) <= 1.0 + 1e-12);

    const Complex back = survival_amplitude(s, -t);
    CHECK(std::abs(back - std::conj(a)) < 1e-13);

    const double c = uniform(g, -20.0, 20.0);
    const EnergyState shifted = s.shifted(c);
    const Complex a_shift = survival_amplitude(shifted, t);
    CHECK(std::abs(std::abs(a_shift) - std::abs(a)) < 1e-12);
    CHECK(std::abs(a_shift - a * std::polar(1.0, -c * t)) < 1e-11);

    const double dh = energy_dispersion(s);
    CHECK(std::abs(energy_dispersion(shifted) - dh) < 1e-12);
    const double lambda = uniform(g, 0.1, 10.0);
    CHECK(energy_dispersion(s.scaled(lambda)) == doctest::Approx(lambda * dh).epsilon(1e-12));

    double total = 0.0;
    for (double p : s.probabilities()) total += p;
    CHECK(std::abs(total - 1.0) < kNormalizationTolerance);
  }
}
