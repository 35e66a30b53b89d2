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

#include "passage/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace passage {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  const __int128 r = static_cast<__int128>(a) * b;
  if (r > kInt64Max || r < -kInt64Max) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

std::optional<std::int64_t> checked_lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace

std::optional<Fraction> approximate_rational(double x, double tol, std::int64_t max_den) {
  if (!(x > 0.0) || !std::isfinite(x) || !(tol > 0.0) || max_den < 1) return std::nullopt;
  if (x >= 1e18) return std::nullopt;

  const long double target = x;
  long double y = target;
  // Convergent recurrences h_k = a_k h_{k-1} + h_{k-2}, same for k.
  std::int64_t h_prev = 0, h = 1;
  std::int64_t k_prev = 1, k = 0;
  for (int iter = 0; iter < 128; ++iter) {
    const long double a_ld = std::floor(y);
    if (a_ld > static_cast<long double>(kInt64Max / 2)) break;
    const auto a = static_cast<std::int64_t>(a_ld);
    const auto ah = checked_mul(a, h);
    const auto ak = checked_mul(a, k);
    if (!ah || !ak || *ah > kInt64Max - h_prev || *ak > kInt64Max - k_prev) break;
    const std::int64_t h_next = *ah + h_prev;
    const std::int64_t k_next = *ak + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;

    const long double scaled_error =
        std::abs(static_cast<long double>(k) * target - static_cast<long double>(h));
    if (scaled_error <= tol && h > 0) return Fraction{h, k};

    const long double frac = y - a_ld;
    if (frac <= 0.0L) break;
    y = 1.0L / frac;
  }
  return std::nullopt;
}

std::optional<OddOddRatio> odd_odd_ratio(double omega_num, double omega_den, double tol,
                                         std::int64_t max_den) {
  if (!(omega_num > 0.0) || !(omega_den > 0.0)) return std::nullopt;
  const auto r = approximate_rational(omega_num / omega_den, tol, max_den);
  if (!r || r->num % 2 == 0 || r->den % 2 == 0) return std::nullopt;
  return OddOddRatio{(r->num + 1) / 2, (r->den + 1) / 2};
}

std::optional<CommonFrequency> common_frequency(std::span<const double> frequencies,
                                                const RationalOptions& opts) {
  if (frequencies.empty()) return std::nullopt;
  const double base = frequencies.front();
  if (!(base > 0.0)) return std::nullopt;

  std::vector<Fraction> ratios;
  ratios.reserve(frequencies.size());
  std::int64_t lcm_den = 1;
  for (double w : frequencies) {
    if (!(w > 0.0)) return std::nullopt;
    const auto r = approximate_rational(w / base, opts.tol, opts.max_den);
    if (!r) return std::nullopt;
    const auto l = checked_lcm(lcm_den, r->den);
    if (!l) return std::nullopt;
    lcm_den = *l;
    ratios.push_back(*r);
  }

  std::vector<std::int64_t> numerators;
  numerators.reserve(ratios.size());
  std::int64_t g = 0;
  for (const Fraction& r : ratios) {
    const auto n = checked_mul(r.num, lcm_den / r.den);
    if (!n) return std::nullopt;
    numerators.push_back(*n);
    g = std::gcd(g, *n);
  }

  CommonFrequency out;
  out.multiples.reserve(numerators.size());
  for (std::int64_t n : numerators) out.multiples.push_back(n / g);
  // base = fundamental * multiples[0], with multiples[0] = lcm_den / g.
  out.fundamental = base / static_cast<double>(out.multiples.front());
  return out;
}

RationalStructure analyze_spectrum(std::span<const double> energies, double hbar,
                                   const RationalOptions& opts) {
  std::vector<double> levels(energies.begin(), energies.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(), same_level), levels.end());

  RationalStructure out;
  if (levels.size() < 2) return out;

  for (std::size_t l = 1; l < levels.size(); ++l) out.frequencies.push_back(levels[l] - levels[0]);
  const double base = out.frequencies.front();
  bool all_detected = true;
  bool all_odd = true;
  for (double w : out.frequencies) {
    auto r = approximate_rational(w / base, opts.tol, opts.max_den);
    all_detected = all_detected && r.has_value();
    if (r) all_odd = all_odd && (r->num % 2 != 0) && (r->den % 2 != 0);
    out.ratios.push_back(r);
  }

  if (all_detected) {
    if (auto common = common_frequency(out.frequencies, opts)) {
      out.all_commensurate = true;
      out.fundamental = common->fundamental;
      out.period = 2.0 * kPi * hbar / common->fundamental;
    }
  }
  out.odd_odd = out.all_commensurate && all_odd;
  return out;
}

RationalStructure analyze(const EnergyState& state, const RationalOptions& opts) {
  std::vector<double> occupied;
  for (std::size_t l : state.support()) occupied.push_back(state.energies()[l]);
  return analyze_spectrum(occupied, state.hbar(), opts);
}

}  // namespace passage
