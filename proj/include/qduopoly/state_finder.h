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

#ifndef QDUOPOLY_STATE_FINDER_H_
#define QDUOPOLY_STATE_FINDER_H_

#include <optional>
#include <string>
#include <vector>

#include "qduopoly/classical_solvers.h"
#include "qduopoly/core_state.h"

namespace qduopoly {

// Coefficients of the quadratic g x^2 + f x + h = 0 whose root is |c12|^2 of
// a state with |c22|^2 = 0 that turns the quantum Stackelberg outcome into
// the Cournot equilibrium, together with the ratio j = |c21|^2 / |c12|^2.
struct FinderCoefficients {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
  double j = 0.0;
};

// Evaluates f, g, h, j term by term. Throws DomainError for non-finite k,
// k <= 0, or k^2 = 9.
FinderCoefficients ComputeFinderCoefficients(double k);

// f^2 - 4 g h evaluated directly from the coefficients.
double FinderDiscriminantDirect(const FinderCoefficients& c);

// The same discriminant in its factored form k^4 (k^2 - 3)^2 / (k^2 - 9)^2.
// The direct form loses all significant digits as k approaches sqrt(3),
// where the discriminant vanishes; the factored form does not.
double FinderDiscriminant(double k);

enum class RootBranch { kPlus, kMinus };

struct CournotMatchingState {
  ModuliSquared moduli;
  double k = 0.0;

  // Amplitudes sqrt(|c_ij|^2), all real and nonnegative.
  TwoQubitPureState ToState() const;
};

// |c12|^2 = (-f +/- sqrt(f^2 - 4gh)) / (2g), |c21|^2 = j |c12|^2,
// |c11|^2 = 1 - |c12|^2 - |c21|^2, |c22|^2 = 0. Throws InfeasibleStateError
// when the discriminant is negative or a modulus squared leaves [0, 1].
CournotMatchingState ComputeCournotMatchingState(
    double k, RootBranch branch = RootBranch::kPlus);

struct ConditionCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

// The four conditions for the quantum outcome to sit at q1 = q2 = k/3.
struct VerificationReport {
  ConditionCheck first_order;    // |dL/dq1 (k/3)| < 1e-7
  ConditionCheck second_order;   // d2L/dq1^2 (k/3) < -1e-9
  ConditionCheck reaction;       // |R2(k/3) - k/3| < 1e-7
  ConditionCheck normalization;  // |sum |c_ij|^2 - 1| < 1e-10

  bool passed() const;
  // Name of the first failing condition, empty when all pass.
  std::string first_failure() const;
};

// Failures are reported, never thrown.
VerificationReport VerifyCournotMatching(const CournotMatchingState& state,
                                         double k);

struct SweepRow {
  double k = 0.0;
  std::optional<CournotMatchingState> state;
  std::optional<VerificationReport> report;
  std::optional<InductionOutcome> outcome;
  // Set when the state could not be built or the solver failed.
  std::string error;

  bool checks_passed() const;
};

// Builds, verifies and solves the matching state at a single k.
SweepRow EvaluateWindowPoint(double k);

// Uniform grid of `steps` points over [k_min, k_max], evaluated in parallel.
// Rows come back in grid order. Throws DomainError unless k_min < k_max and
// steps >= 2.
std::vector<SweepRow> SweepWindow(double k_min, double k_max, int steps);

// Single-threaded reference for SweepWindow.
std::vector<SweepRow> SweepWindowSerial(double k_min, double k_max, int steps);

}  // namespace qduopoly

#endif  // QDUOPOLY_STATE_FINDER_H_
