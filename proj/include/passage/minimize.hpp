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

#ifndef PASSAGE_MINIMIZE_HPP
#define PASSAGE_MINIMIZE_HPP

#include <cmath>
#include <limits>
#include <utility>

namespace passage {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Brent's derivative-free minimizer on [lo, hi], starting from `guess`.
/// Terminates when the bracket half-width drops below rel_tol*|x| + abs_tol.
/// Works for kinks as well as smooth minima: parabolic steps are only taken
/// when they shrink the bracket fast enough, otherwise golden-section steps.
template <typename F>
ScalarMinimum brent_minimize(F&& f, double lo, double hi, double guess,
                             double rel_tol = 1e-14, double abs_tol = 1e-300,
                             int max_iter = 500) {
  constexpr double kGoldenStep = 0.3819660112501051;  // (3 - sqrt 5)/2
  double a = lo, b = hi;
  if (a > b) std::swap(a, b);
  double x = (guess > a && guess < b) ? guess : a + kGoldenStep * (b - a);
  double w = x, v = x;
  double fx = f(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    const double mid = 0.5 * (a + b);
    const double tol1 = rel_tol * std::abs(x) + abs_tol;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) break;

    bool golden = true;
    if (std::abs(e) > tol1) {
      // Parabola through (v, fv), (w, fw), (x, fx).
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (mid >= x) ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = (x >= mid) ? a - x : b - x;
      d = kGoldenStep * e;
    }

    const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx, iter};
}

/// Golden-section search on [lo, hi] until the bracket is narrower than
/// `width`. Converges to an endpoint when the minimum sits there.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double width,
                                      int max_iter = 400) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  int iter = 0;
  for (; iter < max_iter && (b - a) > width; ++iter) {
    if (fc < fd) {
      b = d;
      d = c; fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d; fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  ScalarMinimum best{c, fc, iter};
  if (fd < best.fx) best = {d, fd, iter};
  for (double endpoint : {a, b}) {
    const double fe = f(endpoint);
    if (fe < best.fx) best = {endpoint, fe, iter};
  }
  return best;
}

}  // namespace passage

#endif  // PASSAGE_MINIMIZE_HPP
