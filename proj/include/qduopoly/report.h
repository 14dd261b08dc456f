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

#ifndef QDUOPOLY_REPORT_H_
#define QDUOPOLY_REPORT_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qduopoly/classical_solvers.h"
#include "qduopoly/state_finder.h"

namespace qduopoly {

// One output cell. std::monostate is a missing value: an empty CSV cell or
// a JSON null.
using FieldValue = std::variant<std::monostate, double, bool, std::string>;

struct Field {
  std::string key;
  FieldValue value;
};

// Flat record with a fixed column order.
using OutputRecord = std::vector<Field>;

// 12 significant digits, '.' decimal separator, independent of the locale.
std::string FormatNumber(double v);

// Header taken from the first record; LF line endings.
std::string ToCsv(const std::vector<OutputRecord>& records);

// Array of objects, keys in column order, numbers rounded like the CSV.
std::string ToJson(const std::vector<OutputRecord>& records);

OutputRecord ClassicalRecord(const std::string& model, double k,
                             const InductionOutcome& outcome);

OutputRecord QuantumRecord(double k, const ModuliSquared& moduli,
                           const InductionOutcome& outcome,
                           const VerificationReport& report);

// Columns: k,c11_sq,c12_sq,c21_sq,c22_sq,q1_star,q2_star,payoff_A,payoff_B,
// checks_passed.
OutputRecord SweepRecord(const SweepRow& row);

}  // namespace qduopoly

#endif  // QDUOPOLY_REPORT_H_
