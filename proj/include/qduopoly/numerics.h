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

#ifndef QDUOPOLY_NUMERICS_H_
#define QDUOPOLY_NUMERICS_H_

#include <functional>

namespace qduopoly::numerics {

using ScalarFunction = std::function<double(double)>;

struct Maximum {
  double x = 0.0;
  double value = 0.0;
};

// Maximizes f on [lo, hi]: uniform scan with `samples` cells, then
// golden-section refinement inside the best cell's neighbourhood. Ties on
// the scan resolve to the smaller x.
Maximum MaximizeOnInterval(const ScalarFunction& f, double lo, double hi,
                           int samples = 4096);

// Root of f in [lo, hi] where f(lo) and f(hi) have opposite signs (or one is
// zero). Stops when the bracket is narrower than x_tol or |f| <= f_tol.
double Bisect(const ScalarFunction& f, double lo, double hi,
              double x_tol = 1e-15, double f_tol = 0.0, int max_iter = 200);

double CentralDifference(const ScalarFunction& f, double x, double h);
double SecondCentralDifference(const ScalarFunction& f, double x, double h);

}  // namespace qduopoly::numerics

#endif  // QDUOPOLY_NUMERICS_H_
