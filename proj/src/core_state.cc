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

#include "qduopoly/core_state.h"

#include <cmath>
#include <sstream>

#include "qduopoly/errors.h"

namespace qduopoly {

TwoQubitPureState TwoQubitPureState::FromModuliSquared(const ModuliSquared& m) {
  for (double p : {m.c11, m.c12, m.c21, m.c22}) {
    if (!std::isfinite(p) || p < 0.0) {
      std::ostringstream msg;
      msg << "modulus squared must be finite and nonnegative, got " << p;
      throw DomainError(msg.str());
    }
  }
  return {std::sqrt(m.c11), std::sqrt(m.c12), std::sqrt(m.c21),
          std::sqrt(m.c22)};
}

double TwoQubitPureState::norm_squared() const {
  double total = 0.0;
  for (const Complex& c : amplitudes_) total += std::norm(c);
  return total;
}

ModuliSquared TwoQubitPureState::moduli_squared() const {
  return {std::norm(amplitudes_[0]), std::norm(amplitudes_[1]),
          std::norm(amplitudes_[2]), std::norm(amplitudes_[3])};
}

bool TwoQubitPureState::is_normalized(double tol) const {
  const double n = norm_squared();
  return std::isfinite(n) && std::abs(n - 1.0) <= tol;
}

void TwoQubitPureState::RequireNormalized() const {
  if (!is_normalized()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state is not normalized: sum |c_ij|^2 = " << norm_squared();
    throw NormalizationError(msg.str());
  }
}

DensityMatrix::DensityMatrix(const Matrix4c& m) : m_(m) {
  if (!m_.allFinite()) {
    throw InvalidDensityMatrixError("density matrix has non-finite entries");
  }
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kAlgebraicTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (max |M - M^dagger| = " << herm
        << ")";
    throw InvalidDensityMatrixError(msg.str());
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > kAlgebraicTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace is " << tr.real() << (tr.imag() < 0 ? "" : "+")
        << tr.imag() << "i, expected 1";
    throw InvalidDensityMatrixError(msg.str());
  }
  const Eigen::Vector4d ev = eigenvalues();
  if (ev.minCoeff() < -kPsdTol) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite (min eigenvalue "
        << ev.minCoeff() << ")";
    throw InvalidDensityMatrixError(msg.str());
  }
}

Eigen::Vector4d DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix2c GateMatrix(LocalGate gate) {
  Matrix2c u;
  switch (gate) {
    case LocalGate::kIdentity:
      u << 1.0, 0.0, 0.0, 1.0;
      break;
    case LocalGate::kInversion:
      u << 0.0, 1.0, 1.0, 0.0;
      break;
  }
  return u;
}

Matrix4c TensorProduct(const Matrix2c& alice, const Matrix2c& bob) {
  Matrix4c out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int ap = 0; ap < 2; ++ap) {
        for (int bp = 0; bp < 2; ++bp) {
          out(2 * a + b, 2 * ap + bp) = alice(a, ap) * bob(b, bp);
        }
      }
    }
  }
  return out;
}

Matrix4c LocalUnitary(const LocalOperator& op) {
  const Matrix2c gate = GateMatrix(op.gate);
  const Matrix2c id = GateMatrix(LocalGate::kIdentity);
  return op.acting == Qubit::kA ? TensorProduct(gate, id)
                                : TensorProduct(id, gate);
}

DensityMatrix PureToDensity(const TwoQubitPureState& state) {
  state.RequireNormalized();
  Eigen::Matrix<Complex, 4, 1> psi;
  for (int i = 0; i < 4; ++i) psi(i) = state.amplitudes()[i];
  Matrix4c rho = psi * psi.adjoint();
  rho /= state.norm_squared();
  // Remove rounding asymmetry so the Hermiticity check sees an exact mirror.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho);
}

DensityMatrix Conjugate(const Matrix4c& unitary, const DensityMatrix& rho) {
  return DensityMatrix(unitary * rho.matrix() * unitary.adjoint());
}

DensityMatrix ApplyLocal(const LocalOperator& op, const DensityMatrix& rho) {
  return Conjugate(LocalUnitary(op), rho);
}

}  // namespace qduopoly
