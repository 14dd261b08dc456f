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

#include "qduopoly/duopoly_payoffs.h"

#include <cmath>
#include <sstream>

#include "qduopoly/errors.h"

namespace qduopoly {

DuopolyParams::DuopolyParams(double k) : k_(k) {
  if (!std::isfinite(k) || k <= 0.0) {
    std::ostringstream msg;
    msg << "market constant k must be finite and positive, got " << k;
    throw DomainError(msg.str());
  }
}

void ValidateQuantities(const QuantityPair& q) {
  if (!std::isfinite(q.q1) || !std::isfinite(q.q2) || q.q1 < 0.0 ||
      q.q2 < 0.0) {
    std::ostringstream msg;
    msg << "quantities must be finite and nonnegative, got (" << q.q1 << ", "
        << q.q2 << ")";
    throw DomainError(msg.str());
  }
}

double QuantityToProbability(double q) {
  if (!std::isfinite(q) || q < 0.0) {
    std::ostringstream msg;
    msg << "quantity must be finite and nonnegative, got " << q;
    throw DomainError(msg.str());
  }
  return 1.0 / (1.0 + q);
}

TacticProfile TacticsForQuantities(const QuantityPair& q) {
  return {QuantityToProbability(q.q1), QuantityToProbability(q.q2)};
}

PayoffOperatorPair BuildPayoffOperators(const QuantityPair& q,
                                        const DuopolyParams& params) {
  ValidateQuantities(q);
  const double scale = (1.0 + q.q1) * (1.0 + q.q2);
  const Eigen::Vector4d shape(params.k(), -1.0, -1.0, 0.0);
  PayoffOperatorPair ops;
  ops.diag_a = scale * q.q1 * shape;
  ops.diag_b = scale * q.q2 * shape;
  return ops;
}

OmegaChiCoefficients ComputeOmegaChi(const ModuliSquared& m,
                                     const QuantityPair& q,
                                     const DuopolyParams& params) {
  ValidateQuantities(q);
  // Each row of the moduli matrix is the population pattern one of the four
  // tactic branches moves onto |11>, |12>, |21>, |22>.
  const Eigen::Matrix4d moduli{
      {m.c11, m.c12, m.c21, m.c22},
      {m.c12, m.c11, m.c22, m.c21},
      {m.c21, m.c22, m.c11, m.c12},
      {m.c22, m.c21, m.c12, m.c11},
  };
  const double k = params.k();
  const double scale = (1.0 + q.q1) * (1.0 + q.q2);
  const Eigen::Vector4d va(k * q.q1 * scale, -q.q1 * scale, -q.q1 * scale, 0.0);
  const Eigen::Vector4d vb(k * q.q2 * scale, -q.q2 * scale, -q.q2 * scale, 0.0);
  const Eigen::Vector4d omega = moduli * va;
  const Eigen::Vector4d chi = moduli * vb;
  return {omega(0), omega(1), omega(2), omega(3),
          chi(0),   chi(1),   chi(2),   chi(3)};
}

PayoffPair QuantumPayoffs(const TwoQubitPureState& state, const QuantityPair& q,
                          const DuopolyParams& params) {
  state.RequireNormalized();
  const OmegaChiCoefficients w =
      ComputeOmegaChi(state.moduli_squared(), q, params);
  const double denom = (1.0 + q.q1) * (1.0 + q.q2);
  const double pa =
      ((w.omega11 + w.omega12 * q.q2) + q.q1 * (w.omega21 + w.omega22 * q.q2)) /
      denom;
  const double pb =
      ((w.chi11 + w.chi12 * q.q2) + q.q1 * (w.chi21 + w.chi22 * q.q2)) / denom;
  return {pa, pb};
}

PayoffPair QuantumPayoffsReduced(const ModuliSquared& m, const QuantityPair& q,
                                 const DuopolyParams& params) {
  ValidateQuantities(q);
  const double k = params.k();
  const double margin = (k * m.c11 - m.c12 - m.c21) +
                        q.q2 * (k * m.c12 - m.c11 - m.c22) +
                        q.q1 * (k * m.c21 - m.c22 - m.c11) +
                        q.q1 * q.q2 * (k * m.c22 - m.c21 - m.c12);
  return {q.q1 * margin, q.q2 * margin};
}

PayoffPair TracePipelinePayoffs(const TwoQubitPureState& state,
                                const QuantityPair& q,
                                const DuopolyParams& params) {
  const DensityMatrix rho_ini = PureToDensity(state);
  const DensityMatrix rho_fin = Evolve(rho_ini, TacticsForQuantities(q));
  return TracePayoffs(rho_fin, BuildPayoffOperators(q, params));
}

PayoffPair ClassicalPayoffs(const QuantityPair& q, const DuopolyParams& params) {
  ValidateQuantities(q);
  const double margin = params.k() - (q.q1 + q.q2);
  return {q.q1 * margin, q.q2 * margin};
}

}  // namespace qduopoly
