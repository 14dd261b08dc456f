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

#include "qduopoly/state_finder.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qduopoly/duopoly_payoffs.h"
#include "qduopoly/errors.h"
#include "qduopoly/quantum_stackelberg.h"

namespace qduopoly {
namespace {

constexpr double kFirstOrderTol = 1e-7;
constexpr double kSecondOrderCeiling = -1e-9;
constexpr double kReactionTol = 1e-7;
constexpr double kNormTol = 1e-10;
constexpr double kModulusSlack = 1e-12;

void CheckWindow(double k_min, double k_max, int steps) {
  if (!std::isfinite(k_min) || !std::isfinite(k_max) || !(k_min < k_max)) {
    std::ostringstream msg;
    msg << "sweep needs k_min < k_max, got [" << k_min << ", " << k_max << "]";
    throw DomainError(msg.str());
  }
  if (steps < 2) {
    std::ostringstream msg;
    msg << "sweep needs at least 2 steps, got " << steps;
    throw DomainError(msg.str());
  }
}

double GridPoint(double k_min, double k_max, int steps, int i) {
  if (i == steps - 1) return k_max;
  return k_min + (k_max - k_min) * static_cast<double>(i) / (steps - 1);
}

}  // namespace

FinderCoefficients ComputeFinderCoefficients(double k) {
  DuopolyParams params(k);
  const double k2 = k * k;
  const double k3 = k2 * k;
  if (std::abs(k2 - 9.0) < 1e-12) {
    throw DomainError("finder coefficients are undefined at k^2 = 9");
  }
  FinderCoefficients c;
  c.j = (9.0 - 4.0 * k2) / (k2 - 9.0);
  c.f = c.j * (-7.0 / 18.0 * k2 + k / 3.0 + 0.5) + (k2 / 9.0 + k / 3.0 + 0.5);
  c.g = c.j * c.j * (-k3 / 9.0 + 7.0 / 18.0 * k2 - 0.5) +
        c.j * (2.0 / 9.0 * k3 + 5.0 / 18.0 * k2 - 0.5 * k - 1.0) +
        (-k2 / 9.0 - 0.5 * k - 0.5);
  c.h = -k / 6.0;
  return c;
}

double FinderDiscriminantDirect(const FinderCoefficients& c) {
  return c.f * c.f - 4.0 * c.g * c.h;
}

double FinderDiscriminant(double k) {
  const double k2 = k * k;
  const double ratio = k2 * (k2 - 3.0) / (k2 - 9.0);
  return ratio * ratio;
}

TwoQubitPureState CournotMatchingState::ToState() const {
  return TwoQubitPureState::FromModuliSquared(moduli);
}

CournotMatchingState ComputeCournotMatchingState(double k, RootBranch branch) {
  const FinderCoefficients c = ComputeFinderCoefficients(k);
  const double disc = FinderDiscriminant(k);
  if (!(disc >= 0.0)) {
    std::ostringstream msg;
    msg << "negative discriminant " << disc << " at k = " << k;
    throw InfeasibleStateError(msg.str());
  }
  if (c.g == 0.0) {
    std::ostringstream msg;
    msg << "quadratic degenerates (g = 0) at k = " << k;
    throw InfeasibleStateError(msg.str());
  }
  const double root = std::sqrt(disc);
  const double signed_root = branch == RootBranch::kPlus ? root : -root;

  CournotMatchingState s;
  s.k = k;
  s.moduli.c12 = (-c.f + signed_root) / (2.0 * c.g);
  s.moduli.c21 = c.j * s.moduli.c12;
  s.moduli.c11 = 1.0 - s.moduli.c12 - s.moduli.c21;
  s.moduli.c22 = 0.0;

  const struct {
    const char* name;
    double value;
  } entries[] = {{"|c11|^2", s.moduli.c11},
                 {"|c12|^2", s.moduli.c12},
                 {"|c21|^2", s.moduli.c21}};
  for (const auto& e : entries) {
    if (!std::isfinite(e.value) || e.value < -kModulusSlack ||
        e.value > 1.0 + kModulusSlack) {
      std::ostringstream msg;
      msg.precision(12);
      msg << e.name << " = " << e.value << " is outside [0, 1] at k = " << k;
      throw InfeasibleStateError(msg.str());
    }
  }
  // Rounding can leave an exact zero as -1e-17.
  s.moduli.c11 = std::max(0.0, s.moduli.c11);
  s.moduli.c12 = std::max(0.0, s.moduli.c12);
  s.moduli.c21 = std::max(0.0, s.moduli.c21);
  return s;
}

bool VerificationReport::passed() const {
  return first_order.passed && second_order.passed && reaction.passed &&
         normalization.passed;
}

std::string VerificationReport::first_failure() const {
  for (const ConditionCheck* c :
       {&first_order, &second_order, &reaction, &normalization}) {
    if (!c->passed) return c->name;
  }
  return {};
}

VerificationReport VerifyCournotMatching(const CournotMatchingState& state,
                                         double k) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  VerificationReport rep;
  rep.first_order = {"first_order", kNaN, kFirstOrderTol, false};
  rep.second_order = {"second_order", kNaN, kSecondOrderCeiling, false};
  rep.reaction = {"reaction", kNaN, kReactionTol, false};
  rep.normalization = {"normalization", kNaN, kNormTol, false};

  rep.normalization.value = std::abs(state.moduli.sum() - 1.0);
  rep.normalization.passed = rep.normalization.value < kNormTol;

  const double q = k / 3.0;
  try {
    const DuopolyParams params(k);
    const TwoQubitPureState psi = state.ToState();
    rep.first_order.value = std::abs(LeaderDerivative(q, psi, params));
    rep.first_order.passed = rep.first_order.value < kFirstOrderTol;
    rep.second_order.value = LeaderSecondDerivative(q, psi, params);
    rep.second_order.passed = rep.second_order.value < kSecondOrderCeiling;
    rep.reaction.value = std::abs(QuantumBestResponse(q, psi, params) - q);
    rep.reaction.passed = rep.reaction.value < kReactionTol;
  } catch (const Error&) {
    // Conditions not reached stay NaN and failed.
  }
  return rep;
}

bool SweepRow::checks_passed() const {
  return report.has_value() && report->passed() && outcome.has_value();
}

SweepRow EvaluateWindowPoint(double k) {
  SweepRow row;
  row.k = k;
  try {
    row.state = ComputeCournotMatchingState(k);
  } catch (const Error& e) {
    row.error = e.what();
    return row;
  }
  row.report = VerifyCournotMatching(*row.state, k);
  try {
    row.outcome = SolveQuantumStackelberg(row.state->ToState(), DuopolyParams(k));
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> SweepWindow(double k_min, double k_max, int steps) {
  CheckWindow(k_min, k_max, steps);
  std::vector<SweepRow> rows(static_cast<std::size_t>(steps));
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < steps; ++i) {
    rows[static_cast<std::size_t>(i)] =
        EvaluateWindowPoint(GridPoint(k_min, k_max, steps, i));
  }
  return rows;
}

std::vector<SweepRow> SweepWindowSerial(double k_min, double k_max, int steps) {
  CheckWindow(k_min, k_max, steps);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    rows.push_back(EvaluateWindowPoint(GridPoint(k_min, k_max, steps, i)));
  }
  return rows;
}

}  // namespace qduopoly
