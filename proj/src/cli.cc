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

#include "qduopoly/cli.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qduopoly/classical_solvers.h"
#include "qduopoly/duopoly_payoffs.h"
#include "qduopoly/errors.h"
#include "qduopoly/quantum_stackelberg.h"
#include "qduopoly/report.h"
#include "qduopoly/state_finder.h"
#include "qduopoly/verification.h"

namespace qduopoly {
namespace {

struct GlobalFlags {
  bool json = false;
  std::string out_path;
};

double CheckedK(double k) {
  if (!(k > 0.0) || !(k <= kQuantityMax)) {
    std::ostringstream msg;
    msg << "--k must lie in (0, " << kQuantityMax << "], got " << k;
    throw DomainError(msg.str());
  }
  return k;
}

// Writes to --out when given, otherwise to `out`.
int Emit(const GlobalFlags& g, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (g.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << g.out_path << " for writing\n";
    return kExitUsage;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: failed writing " << g.out_path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

double RoundTo12Digits(double v) {
  const std::string text = FormatNumber(v);
  double rounded = v;
  std::from_chars(text.data(), text.data() + text.size(), rounded);
  return rounded;
}

std::string Render(const GlobalFlags& g,
                   const std::vector<OutputRecord>& records) {
  return g.json ? ToJson(records) : ToCsv(records);
}

std::string RenderChecks(const GlobalFlags& g,
                         const std::vector<CheckOutcome>& checks) {
  if (g.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckOutcome& c : checks) {
      nlohmann::ordered_json o;
      o["name"] = c.name;
      o["passed"] = c.passed;
      o["informational"] = c.informational;
      o["metric"] = RoundTo12Digits(c.metric);
      o["detail"] = c.detail;
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream s;
  for (const CheckOutcome& c : checks) {
    const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    s << tag << "  " << c.name << "  " << c.detail << "\n";
  }
  s << (AllPassed(checks) ? "all checks passed" : "verification FAILED")
    << "\n";
  return s.str();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Quantum Stackelberg duopoly solver"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit JSON instead of CSV");
  app.add_option("--out", g.out_path, "Write output to this file");

  CLI::App* solve = app.add_subcommand("solve", "Solve one game");
  solve->require_subcommand(1);
  solve->fallthrough();

  CLI::App* classical = solve->add_subcommand("classical", "Classical duopoly");
  double classical_k = 0.0;
  std::string model;
  classical->add_option("--k", classical_k, "Market constant k = a - c")
      ->required();
  classical->add_option("--model", model, "cournot or stackelberg")
      ->required()
      ->check(CLI::IsMember({"cournot", "stackelberg"}));

  CLI::App* quantum = solve->add_subcommand("quantum", "Quantum Stackelberg");
  double quantum_k = 0.0;
  std::string state_source;
  std::optional<double> c11, c12, c21, c22;
  quantum->add_option("--k", quantum_k, "Market constant k = a - c")
      ->required();
  quantum->add_option("--state", state_source,
                      "finder, classical-limit or explicit")
      ->check(CLI::IsMember({"finder", "classical-limit", "explicit"}));
  quantum->add_option("--c11sq", c11, "|c11|^2 for an explicit state");
  quantum->add_option("--c12sq", c12, "|c12|^2 for an explicit state");
  quantum->add_option("--c21sq", c21, "|c21|^2 for an explicit state");
  quantum->add_option("--c22sq", c22, "|c22|^2 for an explicit state");

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep the matching window");
  double k_min = 1.5;
  double k_max = 1.73205;
  int steps = 100;
  sweep->add_option("--k-min", k_min, "Lower end of the k grid");
  sweep->add_option("--k-max", k_max, "Upper end of the k grid");
  sweep->add_option("--steps", steps, "Number of grid points (>= 2)");

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite");
  VerifyOptions verify_opts;
  verify->add_flag("--inject-perturbation", verify_opts.inject_perturbation,
                   "Perturb the window states (negative control)");

  std::vector<std::string> argv_store{"qduopoly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classical) {
      const DuopolyParams params(CheckedK(classical_k));
      const InductionOutcome o = model == "cournot"
                                     ? CournotEquilibrium(params)
                                     : ClassicalStackelberg(params);
      return Emit(g, Render(g, {ClassicalRecord(model, params.k(), o)}), out,
                  err);
    }

    if (*quantum) {
      const DuopolyParams params(CheckedK(quantum_k));
      const bool any_explicit = c11 || c12 || c21 || c22;
      if (state_source.empty()) state_source = any_explicit ? "explicit" : "finder";
      if (state_source != "explicit" && any_explicit) {
        throw DomainError("--cXXsq options require --state explicit");
      }
      ModuliSquared moduli;
      if (state_source == "finder") {
        moduli = ComputeCournotMatchingState(params.k()).moduli;
      } else if (state_source == "classical-limit") {
        moduli = {1.0, 0.0, 0.0, 0.0};
      } else {
        if (!(c11 && c12 && c21 && c22)) {
          throw DomainError(
              "an explicit state needs --c11sq, --c12sq, --c21sq and --c22sq");
        }
        moduli = {*c11, *c12, *c21, *c22};
        for (double p : {moduli.c11, moduli.c12, moduli.c21, moduli.c22}) {
          if (!(p >= 0.0 && p <= 1.0)) {
            throw DomainError("moduli squared must lie in [0, 1]");
          }
        }
      }
      const TwoQubitPureState psi = TwoQubitPureState::FromModuliSquared(moduli);
      psi.RequireNormalized();
      const VerificationReport rep =
          VerifyCournotMatching({moduli, params.k()}, params.k());
      const InductionOutcome o = SolveQuantumStackelberg(psi, params);
      return Emit(g, Render(g, {QuantumRecord(params.k(), moduli, o, rep)}),
                  out, err);
    }

    if (*sweep) {
      const std::vector<SweepRow> rows = SweepWindow(k_min, k_max, steps);
      std::vector<OutputRecord> records;
      records.reserve(rows.size());
      for (const SweepRow& r : rows) records.push_back(SweepRecord(r));
      return Emit(g, Render(g, records), out, err);
    }

    if (*verify) {
      const std::vector<CheckOutcome> checks = RunVerificationSuite(verify_opts);
      const int code = Emit(g, RenderChecks(g, checks), out, err);
      if (code != kExitOk) return code;
      return AllPassed(checks) ? kExitOk : kExitVerificationFailed;
    }
  } catch (const InfeasibleStateError& e) {
    err << "error: infeasible state: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NormalizationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return kExitUsage;
}

}  // namespace qduopoly
