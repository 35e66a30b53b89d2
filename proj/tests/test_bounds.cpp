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

#include "passage/bounds.hpp"
#include "passage/error.hpp"
#include "test_support.hpp"

using namespace passage;
using passage::testing::uniform;

namespace {

EnergyState spin1() {
  const std::vector<double> e = {-1.0, 0.0, 1.0};
  const std::vector<Complex> c = {0.5, 1.0 / std::sqrt(2.0), 0.5};
  return make_state(e, c);
}

EnergyState eigenstate() {
  const std::vector<double> e = {0.0, 1.0};
  const std::vector<Complex> c = {0.0, 1.0};
  return make_state(e, c);
}

EnergyState three_level(double omega = 1.0) {
  const std::vector<double> e = {0.0, omega, 3.0 * omega};
  const std::vector<double> p = {0.5, 0.25, 0.25};
  return from_probabilities(e, p);
}

}  // namespace

TEST_CASE("fleming bound") {
  CHECK(fleming_bound(equal_superposition(0.0, 1.0)).value() ==
        doctest::Approx(kPi).epsilon(1e-15));
  CHECK(fleming_bound(spin1()).value() == doctest::Approx(2.221441469079183).epsilon(1e-14));
  CHECK_FALSE(fleming_bound(eigenstate()).is_finite());
}

TEST_CASE("two-level passage") {
  CHECK(two_level_passage(equal_superposition(0.0, 1.0)) == doctest::Approx(kPi));
  CHECK(two_level_passage(equal_superposition(3.0, 7.0)) == doctest::Approx(kPi / 4));

  const std::vector<double> e = {0.0, 1.0};
  const std::vector<double> p = {0.6, 0.4};
  try {
    two_level_passage(from_probabilities(e, p));
    FAIL("expected NotTwoLevelEqual");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kNotTwoLevelEqual);
  }
  CHECK_THROWS_AS(two_level_passage(spin1()), Error);
}

TEST_CASE("odd passage family") {
  const EnergyState s = equal_superposition(0.0, 1.0);
  CHECK(passage_time_family(s, 3) == doctest::Approx(3.0 * kPi));
  CHECK(passage_time_family(s, 1) == doctest::Approx(kPi));
  CHECK(passage_time_family(equal_superposition(0.0, 2.0), 5) == doctest::Approx(2.5 * kPi));
  for (long long k = 1; k < 40; k += 2) {
    CHECK(std::abs(survival_amplitude(s, passage_time_family(s, k))) < 1e-10);
  }
  try {
    passage_time_family(s, 4);
    FAIL("expected EvenK");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kEvenK);
  }
  CHECK_THROWS_AS(passage_time_family(s, -1), Error);
  CHECK_THROWS_AS(passage_time_family(spin1(), 1), Error);
}

TEST_CASE("margolus-levitin bound") {
  CHECK(margolus_levitin_bound(equal_superposition(0.0, 1.0)).value() == doctest::Approx(kPi));
  CHECK(margolus_levitin_bound(equal_superposition(5.0, 6.0)).value() == doctest::Approx(kPi));
  CHECK(margolus_levitin_bound(three_level()).value() == doctest::Approx(kPi / 2));
  // Weight only on the ground level.
  const std::vector<double> e = {0.0, 1.0};
  const std::vector<Complex> c = {1.0, 0.0};
  CHECK_FALSE(margolus_levitin_bound(make_state(e, c)).is_finite());
}

TEST_CASE("bounds report") {
  const BoundsReport two = bounds_report(equal_superposition(0.0, 1.0));
  CHECK(two.delta_h == doctest::Approx(0.5));
  CHECK(two.fleming.value() == doctest::Approx(kPi));
  REQUIRE(two.delta_e_passage.has_value());
  CHECK(*two.delta_e_passage == doctest::Approx(kPi));
  CHECK(two.margolus_levitin.value() == doctest::Approx(kPi));
  CHECK(two.ml_never_sharper);

  const BoundsReport s1 = bounds_report(spin1());
  CHECK(s1.delta_h == doctest::Approx(0.7071067811865476).epsilon(1e-14));
  CHECK(s1.fleming.value() == doctest::Approx(kPi / std::sqrt(2.0)));
  CHECK_FALSE(s1.delta_e_passage.has_value());
  // Shifted spectrum (0, 1, 2) has mean 1.
  CHECK(s1.margolus_levitin.value() == doctest::Approx(kPi / 2));
  CHECK(s1.ml_never_sharper);
  CHECK(ml_never_sharper_than(s1, kPi));

  const BoundsReport eig = bounds_report(eigenstate());
  CHECK(eig.delta_h == 0.0);
  CHECK_FALSE(eig.fleming.is_finite());
  // Ground level 0 is listed, so the shifted mean is 1.
  CHECK(eig.margolus_levitin.value() == doctest::Approx(kPi / 2));
}

TEST_CASE("property: two-level identities") {
  auto g = passage::testing::rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const double lo = uniform(g, -10.0, 10.0);
    const double gap = uniform(g, 0.05, 20.0);
    const EnergyState s = equal_superposition(lo, lo + gap, uniform(g, 0.0, 2 * kPi));
    const double tp = two_level_passage(s);
    CHECK(std::abs(tp - fleming_bound(s).value()) <= 1e-12 * tp);

    const BoundsReport r = bounds_report(s);
    CHECK(std::abs(*r.delta_e_passage - r.fleming.value()) <= 1e-12 * tp);

    // E_i = 0 equality case.
    const EnergyState grounded = equal_superposition(0.0, gap);
    CHECK(std::abs(margolus_levitin_bound(grounded).value() - two_level_passage(grounded)) <=
          1e-12 * tp);

    // Strictly positive lower level: ML is weaker than the passage time.
    const EnergyState lifted = equal_superposition(std::abs(lo) + 0.1, std::abs(lo) + 0.1 + gap);
    CHECK(margolus_levitin_bound(lifted).value() <= two_level_passage(lifted) * (1 + 1e-12));

    const double c = uniform(g, -50.0, 50.0);
    CHECK(std::abs(fleming_bound(s.shifted(c)).value() - fleming_bound(s).value()) <= 1e-12 * tp);
    CHECK(margolus_levitin_bound(s.shifted(c)).value() ==
          doctest::Approx(margolus_levitin_bound(s).value()).epsilon(1e-12));
    CHECK(margolus_levitin_bound(s).value() > 0.0);
  }
}
