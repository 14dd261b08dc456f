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

#ifndef QDUOPOLY_TESTS_SUPPORT_GRID_ORACLE_H_
#define QDUOPOLY_TESTS_SUPPORT_GRID_ORACLE_H_

#include <cstdint>

namespace qduopoly::oracle {

// Payoff model evaluated straight from the diagonal of the final density
// matrix, without going through the library's closed forms.
struct PopulationModel {
  double k = 1.0;
  double c11 = 1.0, c12 = 0.0, c21 = 0.0, c22 = 0.0;  // |c_ij|^2
};

struct Payoffs {
  double a = 0.0;
  double b = 0.0;
};

Payoffs DirectPayoffs(const PopulationModel& m, double q1, double q2);

struct GridSpec {
  double q1_max = 1.0;
  double q2_max = 2.0;
  double step = 1e-4;
  // Golden-section refinement around the grid winners.
  bool refine = true;
};

struct GridOutcome {
  double q1 = 0.0;
  double q2 = 0.0;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  // Leader grid points at which the follower's grid maximum was interior.
  std::int64_t admissible = 0;
};

// Nested brute-force backwards induction. For every leader grid point the
// follower's grid maximum is found; points where it sits on the upper edge
// of the follower grid (problem unbounded) are discarded.
GridOutcome GridBackwardsInduction(const PopulationModel& m,
                                   const GridSpec& spec);
GridOutcome GridBackwardsInductionSerial(const PopulationModel& m,
                                         const GridSpec& spec);

struct GridNash {
  double q1 = 0.0;
  double q2 = 0.0;
  int equilibria = 0;
};

// Pure-strategy Nash equilibria of the simultaneous game on a square grid
// over [0, q_max]; returns the first found and how many exist.
GridNash GridNashEquilibrium(const PopulationModel& m, double q_max,
                             double step);

}  // namespace qduopoly::oracle

#endif  // QDUOPOLY_TESTS_SUPPORT_GRID_ORACLE_H_
