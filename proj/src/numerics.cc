// Copyright 2026 The qduopoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qduopoly/numerics.h"

#include <algorithm>
#include <cmath>

namespace qduopoly::numerics {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;

}  // namespace

Maximum MaximizeOnInterval(const ScalarFunction& f, double lo, double hi,
                           int samples) {
  samples = std::max(samples, 2);
  const double step = (hi - lo) / samples;
  int best = 0;
  double best_value = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double v = f(i == samples ? hi : lo + i * step);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double best_x = best == samples ? hi : lo + best * step;

  // Golden-section on the two cells around the scan winner.
  double a = std::max(lo, best_x - step);
  double b = std::min(hi, best_x + step);
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a));
       ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double refined_x = 0.5 * (a + b);
  const double refined_value = f(refined_x);
  // The scan point may sit on an endpoint maximum the refinement cannot beat.
  if (refined_value > best_value) return {refined_x, refined_value};
  return {best_x, best_value};
}

double Bisect(const ScalarFunction& f, double lo, double hi, double x_tol,
              double f_tol, int max_iter) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (std::abs(fm) <= f_tol) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= x_tol * std::max(1.0, std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

double CentralDifference(const ScalarFunction& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double SecondCentralDifference(const ScalarFunction& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace qduopoly::numerics
