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
#include <random>

#include <gtest/gtest.h>

#include "qduopoly/errors.h"

namespace qduopoly {
namespace {

TwoQubitPureState RandomState(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::array<Complex, 4> a;
  double norm = 0.0;
  for (auto& c : a) {
    c = {n(rng), n(rng)};
    norm += std::norm(c);
  }
  norm = std::sqrt(norm);
  return {a[0] / norm, a[1] / norm, a[2] / norm, a[3] / norm};
}

double MaxAbs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

TEST(PureToDensity, Basis11IsSingleCornerEntry) {
  const DensityMatrix rho = PureToDensity(TwoQubitPureState::Basis11());
  Matrix4c want = Matrix4c::Zero();
  want(0, 0) = 1.0;
  EXPECT_EQ(MaxAbs(rho.matrix() - want), 0.0);
}

TEST(PureToDensity, BellStateHasFourCorners) {
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = PureToDensity({r, 0.0, 0.0, r});
  Matrix4c want = Matrix4c::Zero();
  want(0, 0) = want(0, 3) = want(3, 0) = want(3, 3) = 0.5;
  EXPECT_LT(MaxAbs(rho.matrix() - want), 1e-15);
}

TEST(PureToDensity, RandomStatesAreRankOneProjectors) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = PureToDensity(RandomState(rng));
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT(MaxAbs(rho.matrix() * rho.matrix() - rho.matrix()), 1e-10);
    // Eigen-decomposition oracle: spectrum {0, 0, 0, 1}.
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho.matrix());
    const Eigen::Vector4d ev = es.eigenvalues();
    EXPECT_NEAR(ev(3), 1.0, 1e-12);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(ev(j), 0.0, 1e-12);
  }
}

TEST(PureToDensity, RejectsUnnormalizedState) {
  EXPECT_THROW(PureToDensity({1.0, 0.1, 0.0, 0.0}), NormalizationError);
  EXPECT_THROW(PureToDensity({0.0, 0.0, 0.0, 0.0}), NormalizationError);
  // Within 1e-9 the state is accepted and the trace is exactly restored.
  const DensityMatrix rho = PureToDensity({std::sqrt(1.0 + 5e-10), 0.0, 0.0, 0.0});
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
}

TEST(DensityMatrix, RejectsInvalidMatrices) {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 0.5;
  EXPECT_THROW(DensityMatrix{m}, InvalidDensityMatrixError);  // trace 0.5
  m(1, 1) = 0.5;
  m(0, 1) = Complex(0.0, 0.1);
  EXPECT_THROW(DensityMatrix{m}, InvalidDensityMatrixError);  // not Hermitian
  m(0, 1) = 0.0;
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{m}, InvalidDensityMatrixError);  // not PSD
}

TEST(ApplyLocal, InversionOnAliceMaps11To21) {
  const DensityMatrix rho = PureToDensity(TwoQubitPureState::Basis11());
  const DensityMatrix out = ApplyLocal({LocalGate::kInversion, Qubit::kA}, rho);
  Matrix4c want = Matrix4c::Zero();
  want(Index(Basis::k21), Index(Basis::k21)) = 1.0;
  EXPECT_EQ(MaxAbs(out.matrix() - want), 0.0);
}

TEST(ApplyLocal, InversionOnBobMaps11To12) {
  const DensityMatrix rho = PureToDensity(TwoQubitPureState::Basis11());
  const DensityMatrix out = ApplyLocal({LocalGate::kInversion, Qubit::kB}, rho);
  EXPECT_EQ(out(Index(Basis::k12), Index(Basis::k12)), Complex(1.0));
}

TEST(ApplyLocal, IdentityLeavesInputUnchanged) {
  std::mt19937_64 rng(11);
  const DensityMatrix rho = PureToDensity(RandomState(rng));
  for (Qubit q : {Qubit::kA, Qubit::kB}) {
    const DensityMatrix out = ApplyLocal({LocalGate::kIdentity, q}, rho);
    EXPECT_EQ(MaxAbs(out.matrix() - rho.matrix()), 0.0);
  }
}

TEST(LocalOperator, InversionIsHermitianUnitaryAndSelfInverse) {
  const Matrix2c c = GateMatrix(LocalGate::kInversion);
  EXPECT_EQ((c - c.adjoint()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((c * c - Matrix2c::Identity()).cwiseAbs().maxCoeff(), 0.0);
}

// Property: conjugation preserves Hermiticity, trace and spectrum, and two
// inversions on the same qubit restore the input.
TEST(ApplyLocal, PreservesInvariantsOnRandomStates) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = PureToDensity(RandomState(rng));
    const Qubit q = (i % 2) ? Qubit::kA : Qubit::kB;
    const DensityMatrix once = ApplyLocal({LocalGate::kInversion, q}, rho);
    EXPECT_LT(MaxAbs(once.matrix() - once.matrix().adjoint()), 1e-12);
    EXPECT_NEAR(once.trace().real(), 1.0, 1e-12);
    EXPECT_LT((once.eigenvalues() - rho.eigenvalues()).cwiseAbs().maxCoeff(),
              1e-12);
    const DensityMatrix twice = ApplyLocal({LocalGate::kInversion, q}, once);
    EXPECT_LT(MaxAbs(twice.matrix() - rho.matrix()), 1e-12);
  }
}

TEST(TwoQubitPureState, ModuliIgnorePhases) {
  const TwoQubitPureState a{0.6, Complex(0.0, 0.8), 0.0, 0.0};
  const ModuliSquared m = a.moduli_squared();
  EXPECT_NEAR(m.c11, 0.36, 1e-15);
  EXPECT_NEAR(m.c12, 0.64, 1e-15);
  EXPECT_TRUE(a.is_normalized());
}

TEST(TwoQubitPureState, FromModuliRejectsNegative) {
  EXPECT_THROW(TwoQubitPureState::FromModuliSquared({1.1, -0.1, 0.0, 0.0}),
               DomainError);
}

}  // namespace
}  // namespace qduopoly
