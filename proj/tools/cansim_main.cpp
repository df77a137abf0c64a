// Copyright 2026 The cansim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the simulator only through cansim.h.
//
// Exit codes: 0 pass, 1 violations or mismatch, 2 bad input,
// 3 run stopped on a component failure, 64 usage.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cansim/cansim.h"

namespace {

enum Exit : int {
  kPass = 0,
  kFail = 1,
  kInput = 2,
  kRuntime = 3,
  kUsage = 64,
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using ScenarioPtr =
    std::unique_ptr<cansim_scenario, Deleter<cansim_scenario, cansim_scenario_free>>;
using TracePtr =
    std::unique_ptr<cansim_trace, Deleter<cansim_trace, cansim_trace_free>>;
using ReportPtr =
    std::unique_ptr<cansim_report, Deleter<cansim_report, cansim_report_free>>;
using FuzzPtr = std::unique_ptr<cansim_fuzz_summary,
                                Deleter<cansim_fuzz_summary, cansim_fuzz_free>>;
using StringPtr = std::unique_ptr<char, Deleter<char, cansim_string_free>>;

int report(cansim_status status) {
  std::cerr << "cansim: " << cansim_last_error() << "\n";
  switch (status) {
    case CANSIM_ERR_RUNTIME:
      return kRuntime;
    case CANSIM_ERR_INTERNAL:
      return kRuntime;
    case CANSIM_ERR_INVALID_ARGUMENT:
      return kUsage;
    default:
      return kInput;
  }
}

int loadScenario(const std::string& path, bool fidelity, ScenarioPtr& out) {
  cansim_scenario* s = nullptr;
  if (cansim_status st = cansim_scenario_load(path.c_str(), &s)) return report(st);
  out.reset(s);
  if (fidelity) cansim_scenario_set_fidelity(s, 1);
  if (cansim_status st = cansim_scenario_validate(s)) return report(st);
  return kPass;
}

struct RunArgs {
  std::string scenario;
  std::string out;
  bool fidelity = false;
  bool check = false;
};

int runCommand(const RunArgs& a) {
  ScenarioPtr scenario;
  if (int rc = loadScenario(a.scenario, a.fidelity, scenario)) return rc;

  cansim_trace* raw = nullptr;
  const cansim_status st = cansim_run(scenario.get(), &raw);
  TracePtr trace(raw);
  int rc = kPass;
  if (st != CANSIM_OK) rc = report(st);
  if (!trace) return rc;

  if (a.out.empty() || a.out == "-") {
    char* text = nullptr;
    if (cansim_status s2 = cansim_trace_serialize(trace.get(), &text)) {
      return report(s2);
    }
    StringPtr owned(text);
    std::fputs(text, stdout);
  } else if (cansim_status s2 = cansim_trace_save(trace.get(), a.out.c_str())) {
    return report(s2);
  }
  if (rc != kPass || !a.check) return rc;

  cansim_report* r = nullptr;
  if (cansim_status s2 = cansim_check(trace.get(), nullptr, &r)) return report(s2);
  ReportPtr rep(r);
  std::cerr << cansim_report_text(rep.get());
  return cansim_report_passed(rep.get()) ? kPass : kFail;
}

struct CheckArgs {
  std::string trace;
  std::vector<std::string> predicates;
  long latency = -1;
  bool strict = false;
  bool json = false;
};

int checkCommand(const CheckArgs& a) {
  cansim_check_options opts;
  cansim_check_options_init(&opts);
  opts.latency = a.latency;
  opts.strict = a.strict ? 1 : 0;
  if (!a.predicates.empty()) {
    opts.predicates = 0;
    for (const std::string& name : a.predicates) {
      const unsigned bit = cansim_predicate_from_name(name.c_str());
      if (bit == 0) {
        std::cerr << "cansim: unknown predicate '" << name
                  << "' (expected msg1, msg-can-format, wire, transmission, "
                     "row3, structural or all)\n";
        return kUsage;
      }
      opts.predicates |= bit;
    }
  }

  cansim_trace* t = nullptr;
  if (cansim_status st = cansim_trace_load(a.trace.c_str(), &t)) return report(st);
  TracePtr trace(t);
  cansim_report* r = nullptr;
  if (cansim_status st = cansim_check(trace.get(), &opts, &r)) return report(st);
  ReportPtr rep(r);
  std::cout << (a.json ? cansim_report_json(rep.get())
                       : cansim_report_text(rep.get()));
  if (a.json) std::cout << "\n";
  return cansim_report_passed(rep.get()) ? kPass : kFail;
}

struct FuzzArgs {
  std::uint64_t seed = 0;
  std::size_t nodes = 3;
  std::size_t horizon = 64;
  std::size_t count = 100;
  unsigned threads = 0;
  std::string outDir;
};

int fuzzCommand(const FuzzArgs& a) {
  cansim_fuzz_options opts;
  cansim_fuzz_options_init(&opts);
  opts.seed = a.seed;
  opts.nodes = a.nodes;
  opts.horizon = a.horizon;
  opts.count = a.count;
  opts.threads = a.threads;
  opts.failure_dir = a.outDir.empty() ? nullptr : a.outDir.c_str();
  cansim_fuzz_summary* f = nullptr;
  if (cansim_status st = cansim_fuzz(&opts, &f)) return report(st);
  FuzzPtr summary(f);
  std::cout << cansim_fuzz_text(summary.get());
  return cansim_fuzz_passed(summary.get()) == cansim_fuzz_total(summary.get())
             ? kPass
             : kFail;
}

int oracleCommand(const std::string& path, bool fidelity) {
  ScenarioPtr scenario;
  if (int rc = loadScenario(path, fidelity, scenario)) return rc;
  int equivalent = 0;
  char* detail = nullptr;
  if (cansim_status st = cansim_oracle_diff(scenario.get(), &equivalent, &detail)) {
    return report(st);
  }
  StringPtr owned(detail);
  std::cout << detail;
  return equivalent ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time simulator and trace checker for a CAN bus model"};
  app.set_version_flag("--version", std::string(cansim_version()));
  app.require_subcommand(1);

  RunArgs runArgs;
  auto* run = app.add_subcommand("run", "Simulate a scenario and emit its trace");
  run->add_option("--scenario", runArgs.scenario, "Scenario JSON file")
      ->required();
  run->add_option("--trace,--out", runArgs.out,
                 "Trace output path (default stdout)");
  run->add_flag("--fidelity", runArgs.fidelity,
                "Literal transition table, no buffer priming");
  run->add_flag("--check", runArgs.check,
                "Also run every checker; report goes to stderr");

  CheckArgs checkArgs;
  auto* check = app.add_subcommand("check", "Evaluate predicates over a trace");
  check->add_option("--trace", checkArgs.trace, "Trace JSONL file")->required();
  check->add_option("--predicate", checkArgs.predicates,
                    "Predicate to evaluate; repeatable (default all)")
      ->take_all();
  check->add_option("--latency", checkArgs.latency,
                    "Transmission latency in ticks (default from scenario)")
      ->check(CLI::NonNegativeNumber);
  check->add_flag("--strict", checkArgs.strict, "Treat warnings as failures");
  check->add_flag("--json", checkArgs.json, "Emit the report as JSON");

  FuzzArgs fuzzArgs;
  auto* fuzz = app.add_subcommand("fuzz", "Random scenarios against checkers and oracle");
  fuzz->add_option("--seed", fuzzArgs.seed, "RNG seed")->capture_default_str();
  fuzz->add_option("--nodes", fuzzArgs.nodes, "Nodes per scenario")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fuzz->add_option("--horizon", fuzzArgs.horizon, "Ticks per scenario")
      ->check(CLI::Range(std::size_t{4}, std::size_t{1} << 20))
      ->capture_default_str();
  fuzz->add_option("--count", fuzzArgs.count, "Number of scenarios")
      ->capture_default_str();
  fuzz->add_option("--threads", fuzzArgs.threads, "Worker threads (0 = all cores)");
  fuzz->add_option("--out-dir", fuzzArgs.outDir,
                   "Directory for failing scenarios");

  std::string oracleScenario;
  bool oracleFidelity = false;
  auto* oracle = app.add_subcommand(
      "oracle-diff", "Compare simulator deliveries with the reference model");
  oracle->add_option("--scenario", oracleScenario, "Scenario JSON file")
      ->required();
  oracle->add_flag("--fidelity", oracleFidelity,
                   "Literal transition table, no buffer priming");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*run) return runCommand(runArgs);
  if (*check) return checkCommand(checkArgs);
  if (*fuzz) return fuzzCommand(fuzzArgs);
  return oracleCommand(oracleScenario, oracleFidelity);
}
