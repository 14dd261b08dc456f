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

#include "qduopoly/mw_engine.h"

#include <cmath>
#include <sstream>

#include "qduopoly/errors.h"

namespace qduopoly {
namespace {

constexpr double kImagResidueTol = 1e-8;

void CheckProbability(const char* name, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "tactic probability " << name << " = " << p
        << " is outside [0, 1]";
    throw ProbabilityRangeError(msg.str());
  }
}

}  // namespace

Matrix4c PayoffOperatorPair::op_a() const {
  return diag_a.cast<Complex>().asDiagonal();
}

Matrix4c PayoffOperatorPair::op_b() const {
  return diag_b.cast<Complex>().asDiagonal();
}

DensityMatrix Evolve(const DensityMatrix& rho_ini,
                     const TacticProfile& tactics) {
  CheckProbability("x", tactics.x);
  CheckProbability("y", tactics.y);
  const double x = tactics.x;
  const double y = tactics.y;

  const Matrix2c id = GateMatrix(LocalGate::kIdentity);
  const Matrix2c flip = GateMatrix(LocalGate::kInversion);
  const Matrix4c& rho = rho_ini.matrix();

  auto branch = [&](const Matrix2c& ua, const Matrix2c& ub) -> Matrix4c {
    const Matrix4c u = TensorProduct(ua, ub);
    return u * rho * u.adjoint();
  };

  Matrix4c fin = (x * y) * branch(id, id) + (x * (1.0 - y)) * branch(id, flip) +
                 (y * (1.0 - x)) * branch(flip, id) +
                 ((1.0 - x) * (1.0 - y)) * branch(flip, flip);
  return DensityMatrix(fin);
}

PayoffPair TracePayoffs(const DensityMatrix& rho_fin,
                        const PayoffOperatorPair& ops) {
  // For diagonal operators Tr[P rho] = sum_i P_ii rho_ii.
  const auto diag = rho_fin.matrix().diagonal();
  Complex pa = 0.0;
  Complex pb = 0.0;
  for (int i = 0; i < 4; ++i) {
    pa += ops.diag_a(i) * diag(i);
    pb += ops.diag_b(i) * diag(i);
  }
  if (std::abs(pa.imag()) > kImagResidueTol ||
      std::abs(pb.imag()) > kImagResidueTol) {
    throw NonRealPayoffError("trace payoff has a non-negligible imaginary part");
  }
  return {pa.real(), pb.real()};
}

double TracePayoff(const DensityMatrix& rho_fin, const Matrix4c& op) {
  const Complex tr = (op * rho_fin.matrix()).trace();
  if (std::abs(tr.imag()) > kImagResidueTol) {
    std::ostringstream msg;
    msg << "trace payoff has imaginary part " << tr.imag()
        << "; the payoff operator is not Hermitian";
    throw NonRealPayoffError(msg.str());
  }
  return tr.real();
}

}  // namespace qduopoly
