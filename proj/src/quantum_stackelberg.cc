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

#include "qduopoly/quantum_stackelberg.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qduopoly/errors.h"
#include "qduopoly/numerics.h"

namespace qduopoly {
namespace {

constexpr double kDenominatorTol = 1e-12;
constexpr int kRootScanCells = 256;
constexpr double kTieTol = 1e-10;

void CheckLeaderQuantity(double q1) {
  if (!std::isfinite(q1) || q1 < 0.0) {
    std::ostringstream msg;
    msg << "leader quantity must be finite and nonnegative, got " << q1;
    throw DomainError(msg.str());
  }
}

// Bob's payoff is -q2 (N + q2 D) with N = q1 d1 + d2 and D = q1 d3 + d4;
// Alice's is -q1 (N + q2 D). Every derivative below is written in terms of
// these two linear functions of q1.
struct ReactionTerms {
  double numer;   // N
  double concav;  // D; Bob's payoff is strictly concave in q2 iff D > 0
};

ReactionTerms Terms(double q1, const DeltaCoefficients& dl) {
  return {q1 * dl.d1 + dl.d2, q1 * dl.d3 + dl.d4};
}

}  // namespace

DeltaCoefficients ComputeDeltas(const ModuliSquared& m,
                                const DuopolyParams& params) {
  const double k = params.k();
  return {m.c11 + m.c22 - k * m.c21, m.c12 + m.c21 - k * m.c11,
          m.c12 + m.c21 - k * m.c22, m.c11 + m.c22 - k * m.c12};
}

double SearchLimit(const DuopolyParams& params) { return 10.0 * params.k(); }

double FollowerCurvature(double q1, const TwoQubitPureState& state,
                         const DuopolyParams& params) {
  CheckLeaderQuantity(q1);
  state.RequireNormalized();
  const DeltaCoefficients dl = ComputeDeltas(state.moduli_squared(), params);
  return -2.0 * Terms(q1, dl).concav;
}

FollowerReaction ComputeFollowerReaction(double q1,
                                         const TwoQubitPureState& state,
                                         const DuopolyParams& params) {
  CheckLeaderQuantity(q1);
  state.RequireNormalized();
  const ModuliSquared m = state.moduli_squared();
  const DeltaCoefficients dl = ComputeDeltas(m, params);
  const ReactionTerms t = Terms(q1, dl);
  const double limit = SearchLimit(params);

  const bool singular = std::abs(t.concav) <= kDenominatorTol;
  if (!singular) {
    const double closed = (q1 * dl.d1 + dl.d2) / (-2.0 * t.concav);
    const bool is_maximum = FollowerCurvature(q1, state, params) < 0.0;
    if (is_maximum && closed >= 0.0 && closed <= limit) {
      const double slope = -(dl.d1 + 2.0 * closed * dl.d3) / (2.0 * t.concav);
      return {closed, ReactionKind::kInterior, slope};
    }
  } else if (std::abs(t.numer) <= kDenominatorTol) {
    std::ostringstream msg;
    msg << "follower payoff is constant in q2 at q1 = " << q1;
    throw DegenerateReactionError(msg.str());
  }

  // Otherwise the follower payoff, a quadratic in q2, peaks at an endpoint.
  const double at_zero = QuantumPayoffsReduced(m, {q1, 0.0}, params).b;
  const double at_limit = QuantumPayoffsReduced(m, {q1, limit}, params).b;
  const FollowerReaction r = at_limit > at_zero
                                 ? FollowerReaction{limit, ReactionKind::kCapped, 0.0}
                                 : FollowerReaction{0.0, ReactionKind::kBoundary, 0.0};
  if (singular && r.kind == ReactionKind::kCapped) {
    std::ostringstream msg;
    msg << "reaction denominator vanishes at q1 = " << q1
        << " and the follower payoff has no bracketed maximum";
    throw SingularDenominatorError(msg.str());
  }
  return r;
}

double QuantumBestResponse(double q1, const TwoQubitPureState& state,
                           const DuopolyParams& params) {
  return ComputeFollowerReaction(q1, state, params).q2;
}

double LeaderObjective(double q1, const TwoQubitPureState& state,
                       const DuopolyParams& params) {
  const FollowerReaction r = ComputeFollowerReaction(q1, state, params);
  return QuantumPayoffs(state, {q1, r.q2}, params).a;
}

double LeaderDerivative(double q1, const TwoQubitPureState& state,
                        const DuopolyParams& params) {
  const FollowerReaction r = ComputeFollowerReaction(q1, state, params);
  const DeltaCoefficients dl = ComputeDeltas(state.moduli_squared(), params);
  // On the interior branch q2 = -N / (2 D), the margin collapses to -N / 2
  // and P_A = -q1 (d1 q1 + d2) / 2 exactly.
  if (r.kind == ReactionKind::kInterior) return -(2.0 * q1 * dl.d1 + dl.d2) / 2.0;
  const ReactionTerms t = Terms(q1, dl);
  const double q2 = r.q2;
  const double margin = -(t.numer + q2 * t.concav);
  const double dp_dq1 = margin - q1 * (dl.d1 + q2 * dl.d3);
  // dP_A/dq2 = -q1 D. It multiplies a slope proportional to 1/D, so the
  // same D must be used in both factors for the product to stay accurate
  // close to the reaction's pole.
  const double dp_dq2 = -q1 * t.concav;
  return dp_dq1 + dp_dq2 * r.slope;
}

double LeaderDerivativeExpandedForm(double q1, const TwoQubitPureState& state,
                                    const DuopolyParams& params) {
  const FollowerReaction r = ComputeFollowerReaction(q1, state, params);
  const ModuliSquared m = state.moduli_squared();
  const DeltaCoefficients dl = ComputeDeltas(m, params);
  const double k = params.k();
  const double q2 = r.q2;
  const double dq2_dq1 = r.slope;
  return (m.c11 + m.c22 - m.c12 - m.c21) / (1.0 + q1) *
             (-2.0 * q1 * q1 + q1 * (k - 2.0) + k) +
         (1.0 + 2.0 * q1) * ((k - 1.0) * m.c21 - m.c12) +
         k * (m.c12 - m.c22) - q1 * dq2_dq1 * (dl.d4 + q1 * dl.d3) -
         q2 * (2.0 * q1 * dl.d3 + dl.d4);
}

double LeaderSecondDerivative(double q1, const TwoQubitPureState& state,
                              const DuopolyParams& params) {
  const FollowerReaction r = ComputeFollowerReaction(q1, state, params);
  const DeltaCoefficients dl = ComputeDeltas(state.moduli_squared(), params);
  if (r.kind == ReactionKind::kInterior) return -dl.d1;
  const ReactionTerms t = Terms(q1, dl);
  const double p11 = -2.0 * dl.d1 - 2.0 * r.q2 * dl.d3;
  if (r.slope == 0.0) return p11;
  const double p12 = -(dl.d4 + 2.0 * dl.d3 * q1);
  const double p2 = -q1 * t.concav;
  // Differentiating the closed-form reaction once more gives
  // R'' = -2 d3 R' / D.
  const double slope2 = -2.0 * dl.d3 * r.slope / t.concav;
  return p11 + 2.0 * p12 * r.slope + p2 * slope2;
}

LeaderInterval AdmissibleLeaderInterval(const TwoQubitPureState& state,
                                        const DuopolyParams& params) {
  state.RequireNormalized();
  const DeltaCoefficients dl = ComputeDeltas(state.moduli_squared(), params);
  LeaderInterval iv{0.0, SearchLimit(params)};
  // D(q1) = d3 q1 + d4 > tol.
  const double edge = (kDenominatorTol - dl.d4);
  if (dl.d3 > 0.0) {
    iv.lo = std::max(iv.lo, edge / dl.d3);
  } else if (dl.d3 < 0.0) {
    iv.hi = std::min(iv.hi, edge / dl.d3);
  } else if (dl.d4 <= kDenominatorTol) {
    iv.hi = iv.lo;
  }
  return iv;
}

InductionOutcome SolveQuantumStackelberg(const TwoQubitPureState& state,
                                         const DuopolyParams& params) {
  state.RequireNormalized();
  const LeaderInterval iv = AdmissibleLeaderInterval(state, params);
  if (iv.empty()) {
    throw NoInteriorMaximumError(
        "follower payoff is nowhere strictly concave on the leader's range");
  }
  const DeltaCoefficients dl = ComputeDeltas(state.moduli_squared(), params);
  const double limit = SearchLimit(params);

  // Break points where the follower's reaction changes branch: it reaches
  // zero (N = 0) or the search cap (R = limit).
  std::vector<double> breaks{iv.lo, iv.hi};
  auto add_break = [&](double num, double den) {
    if (den == 0.0) return;
    const double q = num / den;
    if (q > iv.lo && q < iv.hi) breaks.push_back(q);
  };
  add_break(-dl.d2, dl.d1);
  add_break(-(dl.d2 + 2.0 * limit * dl.d4), dl.d1 + 2.0 * limit * dl.d3);
  std::sort(breaks.begin(), breaks.end());

  auto derivative = [&](double q) { return LeaderDerivative(q, state, params); };

  std::vector<double> roots;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double u = breaks[p] + 1e-12 * std::max(1.0, std::abs(breaks[p]));
    const double v =
        breaks[p + 1] - 1e-12 * std::max(1.0, std::abs(breaks[p + 1]));
    if (!(u < v)) continue;
    const double step = (v - u) / kRootScanCells;
    double x_prev = u;
    double f_prev = derivative(u);
    if (f_prev == 0.0) roots.push_back(u);
    for (int i = 1; i <= kRootScanCells; ++i) {
      const double x = i == kRootScanCells ? v : u + i * step;
      const double f = derivative(x);
      if (f == 0.0) {
        roots.push_back(x);
      } else if (f_prev != 0.0 && (f < 0.0) != (f_prev < 0.0)) {
        double root = numerics::Bisect(derivative, x_prev, x);
        // Newton polish on the analytic curvature, kept inside the bracket.
        for (int it = 0; it < 3; ++it) {
          const double d = derivative(root);
          if (std::abs(d) < 1e-14) break;
          const double curv = LeaderSecondDerivative(root, state, params);
          if (curv == 0.0) break;
          const double next = root - d / curv;
          if (!(next >= x_prev && next <= x)) break;
          if (std::abs(derivative(next)) >= std::abs(d)) break;
          root = next;
        }
        roots.push_back(root);
      }
      x_prev = x;
      f_prev = f;
    }
  }

  if (roots.empty()) {
    std::ostringstream msg;
    msg << "no sign change of the leader derivative on [" << iv.lo << ", "
        << iv.hi << "]";
    throw NoInteriorMaximumError(msg.str());
  }

  std::optional<double> best_q1;
  double best_value = 0.0;
  double best_curv = 0.0;
  for (double q : roots) {
    const double curv = LeaderSecondDerivative(q, state, params);
    if (!(curv < 0.0)) continue;
    const double value = LeaderObjective(q, state, params);
    if (!best_q1 || value > best_value + kTieTol ||
        (std::abs(value - best_value) <= kTieTol && q < *best_q1)) {
      best_q1 = q;
      best_value = value;
      best_curv = curv;
    }
  }
  if (!best_q1) {
    std::ostringstream msg;
    msg << "none of the " << roots.size()
        << " stationary points of the leader objective is a maximum";
    throw SecondOrderError(msg.str());
  }

  InductionOutcome out;
  out.q1_star = *best_q1;
  out.q2_star = QuantumBestResponse(out.q1_star, state, params);
  const PayoffPair pay = QuantumPayoffs(state, {out.q1_star, out.q2_star}, params);
  out.payoff_leader = pay.a;
  out.payoff_follower = pay.b;
  out.second_derivative = best_curv;
  out.stationary_points = static_cast<int>(roots.size());
  return out;
}

}  // namespace qduopoly
