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

#include "qduopoly/classical_solvers.h"

#include <cmath>
#include <sstream>

#include "qduopoly/errors.h"

namespace qduopoly {

InductionOutcome CournotEquilibrium(const DuopolyParams& params) {
  const double k = params.k();
  const double q = k / 3.0;
  const PayoffPair p = ClassicalPayoffs({q, q}, params);
  return {q, q, p.a, p.b, -2.0, 1};
}

double ClassicalBestResponse(double q1, const DuopolyParams& params) {
  if (!std::isfinite(q1) || q1 < 0.0 || q1 >= params.k()) {
    std::ostringstream msg;
    msg << "classical reaction needs 0 <= q1 < k, got q1 = " << q1
        << " with k = " << params.k();
    throw DomainError(msg.str());
  }
  return 0.5 * (params.k() - q1);
}

InductionOutcome ClassicalStackelberg(const DuopolyParams& params) {
  // Leader maximizes q1 (k - q1) / 2, whose curvature is -1.
  const double q1 = 0.5 * params.k();
  const double q2 = ClassicalBestResponse(q1, params);
  const PayoffPair p = ClassicalPayoffs({q1, q2}, params);
  return {q1, q2, p.a, p.b, -1.0, 1};
}

}  // namespace qduopoly
