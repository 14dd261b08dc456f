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

#include "qduopoly/classical_solvers.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qduopoly/duopoly_payoffs.h"
#include "qduopoly/errors.h"
#include "qduopoly/numerics.h"
#include "support/grid_oracle.h"

namespace qduopoly {
namespace {

TEST(CournotEquilibrium, ClosedFormValues) {
  for (double k : {1.5, 3.0, 12.0}) {
    const InductionOutcome o = CournotEquilibrium(DuopolyParams(k));
    EXPECT_NEAR(o.q1_star, k / 3, 1e-12);
    EXPECT_NEAR(o.q2_star, k / 3, 1e-12);
    EXPECT_NEAR(o.payoff_leader, k * k / 9, 1e-12);
    EXPECT_NEAR(o.payoff_follower, k * k / 9, 1e-12);
    EXPECT_EQ(o.second_derivative, -2.0);
  }
  const InductionOutcome twelve = CournotEquilibrium(DuopolyParams(12.0));
  EXPECT_EQ(twelve.q1_star, 4.0);
  EXPECT_EQ(twelve.payoff_leader, 16.0);
}

TEST(CournotEquilibrium, MatchesGridNashOracle) {
  const oracle::PopulationModel m{1.5};
  const oracle::GridNash g = oracle::GridNashEquilibrium(m, 1.5, 1e-3);
  EXPECT_EQ(g.equilibria, 1);
  EXPECT_NEAR(g.q1, 0.5, 1e-3);
  EXPECT_NEAR(g.q2, 0.5, 1e-3);
}

// The Cournot quantity is the fixed point of the best response map.
TEST(CournotEquilibrium, IsBestResponseFixedPoint) {
  for (double k : {0.7, 1.5, 12.0}) {
    const DuopolyParams p(k);
    const double q = numerics::Bisect(
        [&](double x) { return ClassicalBestResponse(x, p) - x; }, 0.0, k * (1 - 1e-12));
    EXPECT_NEAR(q, CournotEquilibrium(p).q1_star, 1e-12 * k);
  }
}

TEST(ClassicalBestResponse, Values) {
  const DuopolyParams p(12.0);
  EXPECT_EQ(ClassicalBestResponse(0.0, p), 6.0);
  EXPECT_EQ(ClassicalBestResponse(6.0, p), 3.0);
  EXPECT_THROW(ClassicalBestResponse(12.0, p), DomainError);
  EXPECT_THROW(ClassicalBestResponse(-0.1, p), DomainError);
}

TEST(ClassicalBestResponse, MaximizesFollowerProfit) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const DuopolyParams p(0.5 + 10 * u(rng));
    const double q1 = 0.99 * p.k() * u(rng);
    const double r = ClassicalBestResponse(q1, p);
    const double at = ClassicalPayoffs({q1, r}, p).b;
    for (double d : {-1e-3, 1e-3}) {
      EXPECT_LT(ClassicalPayoffs({q1, r + d}, p).b, at);
    }
  }
}

TEST(ClassicalStackelberg, ClosedFormValues) {
  for (double k : {1.5, 3.0, 12.0}) {
    const InductionOutcome o = ClassicalStackelberg(DuopolyParams(k));
    EXPECT_NEAR(o.q1_star, k / 2, 1e-12);
    EXPECT_NEAR(o.q2_star, k / 4, 1e-12);
    EXPECT_NEAR(o.payoff_leader, k * k / 8, 1e-12);
    EXPECT_NEAR(o.payoff_follower, k * k / 16, 1e-12);
    EXPECT_EQ(o.payoff_leader / o.payoff_follower, 2.0);
    EXPECT_LT(o.second_derivative, 0.0);
  }
  const InductionOutcome twelve = ClassicalStackelberg(DuopolyParams(12.0));
  EXPECT_EQ(twelve.q1_star, 6.0);
  EXPECT_EQ(twelve.q2_star, 3.0);
  EXPECT_EQ(twelve.payoff_leader, 18.0);
  EXPECT_EQ(twelve.payoff_follower, 9.0);
}

TEST(ClassicalStackelberg, LeaderGainsFollowerLoses) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.01, 50.0);
  for (int i = 0; i < 200; ++i) {
    const DuopolyParams p(u(rng));
    const InductionOutcome s = ClassicalStackelberg(p);
    const InductionOutcome c = CournotEquilibrium(p);
    EXPECT_GT(s.payoff_leader, c.payoff_leader);
    EXPECT_GT(c.payoff_follower, s.payoff_follower);
  }
}

TEST(ClassicalStackelberg, MatchesNestedGridOracle) {
  oracle::GridSpec spec;
  spec.q1_max = 1.5;
  spec.q2_max = 1.5;
  const oracle::GridOutcome g = oracle::GridBackwardsInduction({1.5}, spec);
  EXPECT_NEAR(g.q1, 0.75, 2e-4);
  EXPECT_NEAR(g.q2, 0.375, 2e-4);
  EXPECT_NEAR(g.payoff_a, 1.5 * 1.5 / 8, 1e-7);
}

}  // namespace
}  // namespace qduopoly
