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

#ifndef QDUOPOLY_CLASSICAL_SOLVERS_H_
#define QDUOPOLY_CLASSICAL_SOLVERS_H_

#include "qduopoly/duopoly_payoffs.h"

namespace qduopoly {

// Result of a solved duopoly. For sequential games firm A is the leader.
struct InductionOutcome {
  double q1_star = 0.0;
  double q2_star = 0.0;
  double payoff_leader = 0.0;
  double payoff_follower = 0.0;
  // Curvature of the leader's objective at q1_star (negative at a maximum).
  double second_derivative = 0.0;
  // Stationary points of the leader's objective that the solver located.
  int stationary_points = 1;
};

// Simultaneous-move Nash equilibrium q1 = q2 = k/3. second_derivative is the
// curvature of each firm's own profit, -2.
InductionOutcome CournotEquilibrium(const DuopolyParams& params);

// R2(q1) = (k - q1) / 2. Throws DomainError for q1 < 0 or q1 >= k.
double ClassicalBestResponse(double q1, const DuopolyParams& params);

// Leader A at k/2, follower B at k/4; payoffs k^2/8 and k^2/16.
InductionOutcome ClassicalStackelberg(const DuopolyParams& params);

}  // namespace qduopoly

#endif  // QDUOPOLY_CLASSICAL_SOLVERS_H_
