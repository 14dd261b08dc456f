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
#include <random>

#include <gtest/gtest.h>

#include "qduopoly/duopoly_payoffs.h"
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

const DensityMatrix& Rho11() {
  static const DensityMatrix rho = PureToDensity(TwoQubitPureState::Basis11());
  return rho;
}

TEST(Evolve, IdentityTacticsLeaveStateUnchanged) {
  const DensityMatrix out = Evolve(Rho11(), {1.0, 1.0});
  EXPECT_EQ(MaxAbs(out.matrix() - Rho11().matrix()), 0.0);
}

TEST(Evolve, QuantityTacticsGiveDiagonalWeights) {
  const double q1 = 0.7, q2 = 2.5;
  const DensityMatrix out = Evolve(Rho11(), {1.0 / (1 + q1), 1.0 / (1 + q2)});
  const double s = (1 + q1) * (1 + q2);
  Matrix4c want = Matrix4c::Zero();
  want(0, 0) = 1.0 / s;
  want(1, 1) = q2 / s;
  want(2, 2) = q1 / s;
  want(3, 3) = q1 * q2 / s;
  EXPECT_LT(MaxAbs(out.matrix() - want), 1e-15);
}

TEST(Evolve, BothFlipGivesDoubleInversion) {
  std::mt19937_64 rng(3);
  const DensityMatrix rho = PureToDensity(RandomState(rng));
  const Matrix2c c = GateMatrix(LocalGate::kInversion);
  const Matrix4c cc = TensorProduct(c, c);
  const DensityMatrix out = Evolve(rho, {0.0, 0.0});
  EXPECT_LT(MaxAbs(out.matrix() - cc * rho.matrix() * cc.adjoint()), 1e-15);
}

TEST(Evolve, RejectsProbabilitiesOutsideUnitInterval) {
  EXPECT_THROW(Evolve(Rho11(), {1.2, 0.5}), ProbabilityRangeError);
  EXPECT_THROW(Evolve(Rho11(), {0.5, -0.1}), ProbabilityRangeError);
  EXPECT_THROW(Evolve(Rho11(), {std::nan(""), 0.5}), ProbabilityRangeError);
}

// Property: evolve is affine in x (and by symmetry y).
TEST(Evolve, IsAffineInEachProbability) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = PureToDensity(RandomState(rng));
    const double x = u(rng), y = u(rng);
    const Matrix4c mixed = x * Evolve(rho, {1.0, y}).matrix() +
                           (1 - x) * Evolve(rho, {0.0, y}).matrix();
    EXPECT_LT(MaxAbs(Evolve(rho, {x, y}).matrix() - mixed), 1e-12);
    const Matrix4c mixed_y = y * Evolve(rho, {x, 1.0}).matrix() +
                             (1 - y) * Evolve(rho, {x, 0.0}).matrix();
    EXPECT_LT(MaxAbs(Evolve(rho, {x, y}).matrix() - mixed_y), 1e-12);
  }
}

TEST(TracePayoffs, CournotPointGivesKSquaredOverNine) {
  for (double k : {1.5, 3.0, 12.0}) {
    const DuopolyParams p(k);
    const QuantityPair q{k / 3, k / 3};
    const PayoffPair pay =
        TracePayoffs(Evolve(Rho11(), TacticsForQuantities(q)),
                     BuildPayoffOperators(q, p));
    EXPECT_NEAR(pay.a, k * k / 9, 1e-12 * k * k);
    EXPECT_NEAR(pay.b, k * k / 9, 1e-12 * k * k);
  }
}

TEST(TracePayoffs, ZeroOperatorGivesZero) {
  std::mt19937_64 rng(9);
  PayoffOperatorPair ops;
  ops.diag_b = Eigen::Vector4d(1, 2, 3, 4);
  const PayoffPair pay = TracePayoffs(PureToDensity(RandomState(rng)), ops);
  EXPECT_EQ(pay.a, 0.0);
}

TEST(TracePayoffs, MatchesDirectDiagonalSum) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n(0.0, 3.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho =
        Evolve(PureToDensity(RandomState(rng)), {u(rng), u(rng)});
    PayoffOperatorPair ops;
    ops.diag_a = Eigen::Vector4d(n(rng), n(rng), n(rng), n(rng));
    ops.diag_b = Eigen::Vector4d(n(rng), n(rng), n(rng), n(rng));
    double sa = 0.0, sb = 0.0;
    for (int j = 0; j < 4; ++j) {
      sa += ops.diag_a(j) * rho(j, j).real();
      sb += ops.diag_b(j) * rho(j, j).real();
    }
    const PayoffPair pay = TracePayoffs(rho, ops);
    EXPECT_NEAR(pay.a, sa, 1e-12);
    EXPECT_NEAR(pay.b, sb, 1e-12);
    // The general 4x4 path agrees with the diagonal shortcut.
    EXPECT_NEAR(TracePayoff(rho, ops.op_a()), sa, 1e-12);
  }
}

TEST(TracePayoff, NonHermitianOperatorIsRejected) {
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = PureToDensity({r, r, 0.0, 0.0});
  Matrix4c op = Matrix4c::Zero();
  op(0, 1) = Complex(0.0, 1.0);  // Tr[op rho] = i/2
  EXPECT_THROW(TracePayoff(rho, op), NonRealPayoffError);
}

// Property: multiplying amplitudes by phases changes nothing observable.
TEST(TracePayoffs, InvariantUnderAmplitudePhases) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> ph(0.0, 2 * M_PI);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const TwoQubitPureState s = RandomState(rng);
    std::array<Complex, 4> rot;
    for (int j = 0; j < 4; ++j) rot[j] = s.amplitudes()[j] * std::polar(1.0, ph(rng));
    const TwoQubitPureState t{rot[0], rot[1], rot[2], rot[3]};
    const DuopolyParams p(u(rng) + 0.1);
    const QuantityPair q{u(rng), u(rng)};
    const PayoffPair a = TracePipelinePayoffs(s, q, p);
    const PayoffPair b = TracePipelinePayoffs(t, q, p);
    EXPECT_NEAR(a.a, b.a, 1e-10);
    EXPECT_NEAR(a.b, b.b, 1e-10);
  }
}

}  // namespace
}  // namespace qduopoly
