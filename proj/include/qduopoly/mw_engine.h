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

#ifndef QDUOPOLY_MW_ENGINE_H_
#define QDUOPOLY_MW_ENGINE_H_

#include <Eigen/Dense>

#include "qduopoly/core_state.h"

namespace qduopoly {

// Alice applies I with probability x and C with 1 - x; Bob likewise with y.
struct TacticProfile {
  double x = 1.0;
  double y = 1.0;
};

// Payoff operators that are diagonal in the fixed basis. Only the diagonals
// are stored, so off-diagonal entries are exactly zero by construction.
struct PayoffOperatorPair {
  Eigen::Vector4d diag_a = Eigen::Vector4d::Zero();
  Eigen::Vector4d diag_b = Eigen::Vector4d::Zero();

  Matrix4c op_a() const;
  Matrix4c op_b() const;
};

struct PayoffPair {
  double a = 0.0;
  double b = 0.0;
};

// rho_fin = xy (I(x)I) rho (I(x)I)^+ + x(1-y) (I(x)C) rho (I(x)C)^+
//         + y(1-x) (C(x)I) rho (C(x)I)^+ + (1-x)(1-y) (C(x)C) rho (C(x)C)^+
// Throws ProbabilityRangeError if x or y lies outside [0, 1].
DensityMatrix Evolve(const DensityMatrix& rho_ini, const TacticProfile& tactics);

// (Tr[op_a rho], Tr[op_b rho]) for diagonal operators.
PayoffPair TracePayoffs(const DensityMatrix& rho_fin,
                        const PayoffOperatorPair& ops);

// Tr[op rho] for a general 4x4 operator. Throws NonRealPayoffError when the
// imaginary part exceeds 1e-8.
double TracePayoff(const DensityMatrix& rho_fin, const Matrix4c& op);

}  // namespace qduopoly

#endif  // QDUOPOLY_MW_ENGINE_H_
