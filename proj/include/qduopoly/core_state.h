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

#ifndef QDUOPOLY_CORE_STATE_H_
#define QDUOPOLY_CORE_STATE_H_

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace qduopoly {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;

// Basis ordering shared by every module: |11>, |12>, |21>, |22>. The first
// index is Alice's qubit, the second Bob's; "1" is the lower state and "2"
// the upper one.
enum class Basis : int { k11 = 0, k12 = 1, k21 = 2, k22 = 3 };

constexpr int Index(Basis b) { return static_cast<int>(b); }

inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kPsdTol = 1e-10;

// |c_ij|^2 for the four basis states. This is all the payoff layer ever
// needs from a state.
struct ModuliSquared {
  double c11 = 0.0;
  double c12 = 0.0;
  double c21 = 0.0;
  double c22 = 0.0;

  double sum() const { return c11 + c12 + c21 + c22; }
};

class TwoQubitPureState {
 public:
  // Amplitudes are stored as given; normalization is checked by the
  // operations that consume the state (see RequireNormalized).
  TwoQubitPureState(Complex c11, Complex c12, Complex c21, Complex c22)
      : amplitudes_{c11, c12, c21, c22} {}

  static TwoQubitPureState Basis11() { return {1.0, 0.0, 0.0, 0.0}; }

  // Nonnegative real amplitudes sqrt(|c_ij|^2). Negative inputs are a
  // DomainError.
  static TwoQubitPureState FromModuliSquared(const ModuliSquared& m);

  Complex c11() const { return amplitudes_[0]; }
  Complex c12() const { return amplitudes_[1]; }
  Complex c21() const { return amplitudes_[2]; }
  Complex c22() const { return amplitudes_[3]; }
  Complex amplitude(Basis b) const { return amplitudes_[Index(b)]; }
  const std::array<Complex, 4>& amplitudes() const { return amplitudes_; }

  double norm_squared() const;
  ModuliSquared moduli_squared() const;
  bool is_normalized(double tol = kNormalizationTol) const;

  // Throws NormalizationError when |norm^2 - 1| > kNormalizationTol.
  void RequireNormalized() const;

 private:
  std::array<Complex, 4> amplitudes_;
};

// 4x4 Hermitian, unit-trace, positive semidefinite matrix in the fixed basis.
class DensityMatrix {
 public:
  // Validates all invariants; throws InvalidDensityMatrixError otherwise.
  explicit DensityMatrix(const Matrix4c& m);

  const Matrix4c& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  Complex trace() const { return m_.trace(); }
  // Real diagonal populations rho_ii.
  Eigen::Vector4d diagonal() const { return m_.diagonal().real(); }
  Eigen::Vector4d eigenvalues() const;

 private:
  Matrix4c m_;
};

enum class LocalGate { kIdentity, kInversion };
enum class Qubit { kA, kB };

struct LocalOperator {
  LocalGate gate = LocalGate::kIdentity;
  Qubit acting = Qubit::kA;
};

// 2x2 matrix of the gate: I, or C with C|1> = |2>, C|2> = |1>.
Matrix2c GateMatrix(LocalGate gate);

// U_A (x) U_B in the fixed basis.
Matrix4c TensorProduct(const Matrix2c& alice, const Matrix2c& bob);

// Full two-qubit unitary for a single local operator (the other qubit gets I).
Matrix4c LocalUnitary(const LocalOperator& op);

// |psi><psi| / <psi|psi>. Throws NormalizationError when the state is not
// normalized within kNormalizationTol; the residual is divided out so the
// result has unit trace to working precision.
DensityMatrix PureToDensity(const TwoQubitPureState& state);

DensityMatrix ApplyLocal(const LocalOperator& op, const DensityMatrix& rho);

// U rho U^dagger for an arbitrary two-qubit unitary.
DensityMatrix Conjugate(const Matrix4c& unitary, const DensityMatrix& rho);

}  // namespace qduopoly

#endif  // QDUOPOLY_CORE_STATE_H_
