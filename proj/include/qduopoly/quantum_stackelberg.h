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

#ifndef QDUOPOLY_QUANTUM_STACKELBERG_H_
#define QDUOPOLY_QUANTUM_STACKELBERG_H_

#include <optional>

#include "qduopoly/classical_solvers.h"
#include "qduopoly/core_state.h"
#include "qduopoly/duopoly_payoffs.h"

namespace qduopoly {

// Numerator and denominator pieces of the follower's quantum reaction
//   R2(q1) = (q1 d1 + d2) / (-2 (q1 d3 + d4)).
struct DeltaCoefficients {
  double d1 = 0.0;  // |c11|^2 + |c22|^2 - k |c21|^2
  double d2 = 0.0;  // |c12|^2 + |c21|^2 - k |c11|^2
  double d3 = 0.0;  // |c12|^2 + |c21|^2 - k |c22|^2
  double d4 = 0.0;  // |c11|^2 + |c22|^2 - k |c12|^2
};

DeltaCoefficients ComputeDeltas(const ModuliSquared& m,
                                const DuopolyParams& params);

// Upper end of every numerical search over quantities: 10 k.
double SearchLimit(const DuopolyParams& params);

enum class ReactionKind {
  kInterior,  // stationary point of a strictly concave follower payoff
  kBoundary,  // q2 = 0 is the maximizer
  kCapped,    // maximizer sits on the search limit; the problem is unbounded
};

struct FollowerReaction {
  double q2 = 0.0;
  ReactionKind kind = ReactionKind::kInterior;
  // dq2/dq1 of the closed-form reaction; zero on the boundary or the cap.
  double slope = 0.0;
};

// d^2 [P_B]_qtm / dq2^2 at leader quantity q1 (independent of q2).
double FollowerCurvature(double q1, const TwoQubitPureState& state,
                         const DuopolyParams& params);

// Bob's reaction to q1. The closed form is used when it is a verified
// interior maximum; otherwise the better of the endpoints 0 and SearchLimit
// is returned, since P_B is quadratic in q2. Throws DegenerateReactionError
// when P_B does not depend on q2, and SingularDenominatorError when the
// reaction denominator vanishes and the cap wins.
FollowerReaction ComputeFollowerReaction(double q1,
                                         const TwoQubitPureState& state,
                                         const DuopolyParams& params);

double QuantumBestResponse(double q1, const TwoQubitPureState& state,
                           const DuopolyParams& params);

// [P_A(q1, R2(q1))]_qtm.
double LeaderObjective(double q1, const TwoQubitPureState& state,
                       const DuopolyParams& params);

// Total derivative of LeaderObjective by the chain rule through the
// reaction. On the interior branch it reduces to -(2 d1 q1 + d2) / 2.
double LeaderDerivative(double q1, const TwoQubitPureState& state,
                        const DuopolyParams& params);

// The leader's first-order expression expanded term by term, with q2 and
// dq2/dq1 taken from the reaction. Kept to be compared against
// LeaderDerivative.
double LeaderDerivativeExpandedForm(double q1, const TwoQubitPureState& state,
                                    const DuopolyParams& params);

// Analytic second derivative of LeaderObjective.
double LeaderSecondDerivative(double q1, const TwoQubitPureState& state,
                              const DuopolyParams& params);

// Open interval of leader quantities inside [0, SearchLimit] for which the
// follower's payoff is strictly concave in q2, so that Bob has a unique best
// response that does not depend on the search cap. Empty when lo >= hi.
struct LeaderInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty() const { return !(lo < hi); }
};

LeaderInterval AdmissibleLeaderInterval(const TwoQubitPureState& state,
                                        const DuopolyParams& params);

// Backwards induction in the quantum game: roots of LeaderDerivative over
// the admissible interval are bracketed and bisected, the best maximum is
// kept, and the follower's reaction and both payoffs are filled in.
// Throws NoInteriorMaximumError when no stationary point is bracketed and
// SecondOrderError when none of the stationary points is a maximum.
InductionOutcome SolveQuantumStackelberg(const TwoQubitPureState& state,
                                         const DuopolyParams& params);

}  // namespace qduopoly

#endif  // QDUOPOLY_QUANTUM_STACKELBERG_H_
