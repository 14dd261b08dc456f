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

#ifndef QDUOPOLY_ERRORS_H_
#define QDUOPOLY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qduopoly {

// Base class for every error raised by the library. Each subclass names one
// failure mode so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QDUOPOLY_DEFINE_ERROR(Name)     \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

QDUOPOLY_DEFINE_ERROR(NormalizationError);
QDUOPOLY_DEFINE_ERROR(InvalidDensityMatrixError);
QDUOPOLY_DEFINE_ERROR(DomainError);
QDUOPOLY_DEFINE_ERROR(ProbabilityRangeError);
QDUOPOLY_DEFINE_ERROR(NonRealPayoffError);
QDUOPOLY_DEFINE_ERROR(DegenerateReactionError);
QDUOPOLY_DEFINE_ERROR(SingularDenominatorError);
QDUOPOLY_DEFINE_ERROR(NoInteriorMaximumError);
QDUOPOLY_DEFINE_ERROR(SecondOrderError);
QDUOPOLY_DEFINE_ERROR(InfeasibleStateError);

#undef QDUOPOLY_DEFINE_ERROR

}  // namespace qduopoly

#endif  // QDUOPOLY_ERRORS_H_
