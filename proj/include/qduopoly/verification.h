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

#ifndef QDUOPOLY_VERIFICATION_H_
#define QDUOPOLY_VERIFICATION_H_

#include <cstdint>
#include <string>
#include <vector>

namespace qduopoly {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  // Informational checks report a finding and never fail the suite.
  bool informational = false;
  // Worst deviation seen by the check, in the check's own units.
  double metric = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20021;
  // Negative control: shifts weight from |c11|^2 to |c12|^2 in every
  // window state so the matching conditions must fail.
  bool inject_perturbation = false;
};

// Classical limits, trace/closed-form identity, derivative checks and the
// Cournot-matching window, one entry per check.
std::vector<CheckOutcome> RunVerificationSuite(const VerifyOptions& options);

bool AllPassed(const std::vector<CheckOutcome>& checks);

}  // namespace qduopoly

#endif  // QDUOPOLY_VERIFICATION_H_
