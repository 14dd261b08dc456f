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

#ifndef QDUOPOLY_CLI_H_
#define QDUOPOLY_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qduopoly {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitSolverFailure = 3,
};

// Entry point of the command-line tool. `args` excludes the program name.
//   solve classical --k K --model {cournot,stackelberg}
//   solve quantum --k K [--state {finder,classical-limit,explicit}]
//                 [--c11sq A --c12sq B --c21sq C --c22sq D]
//   sweep [--k-min 1.5] [--k-max 1.73205] [--steps 100]
//   verify [--inject-perturbation]
// Global flags: --json, --out PATH.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace qduopoly

#endif  // QDUOPOLY_CLI_H_
