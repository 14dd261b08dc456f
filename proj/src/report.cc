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

#include "qduopoly/report.h"

#include <charconv>
#include <cmath>
#include <system_error>

#include "json.hpp"

namespace qduopoly {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string CsvCell(const FieldValue& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double d) const { return FormatNumber(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

ordered_json JsonCell(const FieldValue& v) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(double d) const {
      if (!std::isfinite(d)) return nullptr;
      // Round through the 12-digit text so parse/dump is byte-stable.
      const std::string text = FormatNumber(d);
      double rounded = d;
      std::from_chars(text.data(), text.data() + text.size(), rounded);
      return rounded;
    }
    ordered_json operator()(bool b) const { return b; }
    ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

FieldValue Optional(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

}  // namespace

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string ToCsv(const std::vector<OutputRecord>& records) {
  std::string out;
  if (records.empty()) return out;
  for (std::size_t i = 0; i < records.front().size(); ++i) {
    if (i) out += ',';
    out += records.front()[i].key;
  }
  out += '\n';
  for (const OutputRecord& r : records) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += CsvCell(r[i].value);
    }
    out += '\n';
  }
  return out;
}

std::string ToJson(const std::vector<OutputRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const OutputRecord& r : records) {
    ordered_json obj = ordered_json::object();
    for (const Field& f : r) obj[f.key] = JsonCell(f.value);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

OutputRecord ClassicalRecord(const std::string& model, double k,
                             const InductionOutcome& outcome) {
  return {{"model", model},
          {"k", k},
          {"q1_star", outcome.q1_star},
          {"q2_star", outcome.q2_star},
          {"payoff_A", outcome.payoff_leader},
          {"payoff_B", outcome.payoff_follower}};
}

OutputRecord QuantumRecord(double k, const ModuliSquared& moduli,
                           const InductionOutcome& outcome,
                           const VerificationReport& report) {
  return {{"k", k},
          {"c11_sq", moduli.c11},
          {"c12_sq", moduli.c12},
          {"c21_sq", moduli.c21},
          {"c22_sq", moduli.c22},
          {"q1_star", outcome.q1_star},
          {"q2_star", outcome.q2_star},
          {"payoff_A", outcome.payoff_leader},
          {"payoff_B", outcome.payoff_follower},
          {"second_derivative", outcome.second_derivative},
          {"checks_passed", report.passed()},
          {"first_order_ok", report.first_order.passed},
          {"second_order_ok", report.second_order.passed},
          {"reaction_ok", report.reaction.passed},
          {"normalization_ok", report.normalization.passed}};
}

OutputRecord SweepRecord(const SweepRow& row) {
  std::optional<double> c11, c12, c21, c22, q1, q2, pa, pb;
  if (row.state) {
    c11 = row.state->moduli.c11;
    c12 = row.state->moduli.c12;
    c21 = row.state->moduli.c21;
    c22 = row.state->moduli.c22;
  }
  if (row.outcome) {
    q1 = row.outcome->q1_star;
    q2 = row.outcome->q2_star;
    pa = row.outcome->payoff_leader;
    pb = row.outcome->payoff_follower;
  }
  return {{"k", row.k},
          {"c11_sq", Optional(c11)},
          {"c12_sq", Optional(c12)},
          {"c21_sq", Optional(c21)},
          {"c22_sq", Optional(c22)},
          {"q1_star", Optional(q1)},
          {"q2_star", Optional(q2)},
          {"payoff_A", Optional(pa)},
          {"payoff_B", Optional(pb)},
          {"checks_passed", row.checks_passed()}};
}

}  // namespace qduopoly
