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

#ifndef QDUOPOLY_DUOPOLY_PAYOFFS_H_
#define QDUOPOLY_DUOPOLY_PAYOFFS_H_

#include "qduopoly/core_state.h"
#include "qduopoly/mw_engine.h"

namespace qduopoly {

// Largest quantity (and market constant) the CLI accepts.
inline constexpr double kQuantityMax = 1e6;

// Market constant k = a - c of the linear-demand duopoly; must be positive.
class DuopolyParams {
 public:
  // Throws DomainError if k is not finite or k <= 0.
  explicit DuopolyParams(double k);

  double k() const { return k_; }

 private:
  double k_;
};

struct QuantityPair {
  double q1 = 0.0;
  double q2 = 0.0;
};

// Throws DomainError unless both quantities are finite and >= 0.
void ValidateQuantities(const QuantityPair& q);

// Coefficients of the closed-form quantum payoffs. They carry the
// (1+q1)(1+q2) scale factor, which the payoff formula divides out again.
struct OmegaChiCoefficients {
  double omega11 = 0.0, omega12 = 0.0, omega21 = 0.0, omega22 = 0.0;
  double chi11 = 0.0, chi12 = 0.0, chi21 = 0.0, chi22 = 0.0;
};

// 1 / (1 + q). Throws DomainError for q < 0 or non-finite q.
double QuantityToProbability(double q);

// (x, y) = (1/(1+q1), 1/(1+q2)).
TacticProfile TacticsForQuantities(const QuantityPair& q);

// (P_A)_oper = (1+q1)(1+q2) q1 [k|11><11| - |12><12| - |21><21|], and the
// same with q2 for Bob.
PayoffOperatorPair BuildPayoffOperators(const QuantityPair& q,
                                        const DuopolyParams& params);

OmegaChiCoefficients ComputeOmegaChi(const ModuliSquared& m,
                                     const QuantityPair& q,
                                     const DuopolyParams& params);

// Closed-form quantum payoffs in the uncancelled form
//   [(w11 + w12 q2) + q1 (w21 + w22 q2)] / ((1+q1)(1+q2)).
// Throws NormalizationError for an unnormalized state.
PayoffPair QuantumPayoffs(const TwoQubitPureState& state, const QuantityPair& q,
                          const DuopolyParams& params);

// Same payoffs with the (1+q1)(1+q2) factor cancelled analytically:
// P_A = q1 * m, P_B = q2 * m with m the effective unit margin.
PayoffPair QuantumPayoffsReduced(const ModuliSquared& m, const QuantityPair& q,
                                 const DuopolyParams& params);

// Full Marinatto-Weber pipeline: density matrix, tactics, trace payoffs.
PayoffPair TracePipelinePayoffs(const TwoQubitPureState& state,
                                const QuantityPair& q,
                                const DuopolyParams& params);

// q_i [k - (q1 + q2)].
PayoffPair ClassicalPayoffs(const QuantityPair& q, const DuopolyParams& params);

}  // namespace qduopoly

#endif  // QDUOPOLY_DUOPOLY_PAYOFFS_H_
