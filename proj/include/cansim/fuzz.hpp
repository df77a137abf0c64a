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

// Seeded scenario generation and the check-everything campaign loop.
// Output depends only on the configuration, never on thread count or
// platform.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cansim/checkers.hpp"
#include "cansim/oracle.hpp"
#include "cansim/types.hpp"

namespace cansim {

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t minNodes = 2;
  std::size_t maxNodes = 2;
  std::size_t horizon = 64;
  std::size_t count = 100;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Injections only at odd ticks; every identifier in the scenario is
// distinct; payloads of 0..8 random octets.
Scenario generateScenario(std::uint64_t seed, std::size_t index,
                          const FuzzConfig& config);

struct CaseResult {
  std::size_t index = 0;
  Scenario scenario;
  bool passed = false;
  Report report;
  Verdict verdict;
  std::string error;  // set when the run itself threw or failed
};

// Runs the scenario, every checker, and the oracle comparison.
CaseResult evaluateScenario(const Scenario& scenario, std::size_t index = 0);

struct FuzzSummary {
  std::uint64_t seed = 0;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<CaseResult> failures;  // ascending index

  std::string render() const;
};

// Throws ContractError unless minNodes >= 1, minNodes <= maxNodes and
// horizon >= 4.
FuzzSummary runFuzz(const FuzzConfig& config);

// Writes each failing scenario as <dir>/fuzz-<seed>-<index>.json and
// returns the paths. Creates `dir` if needed.
std::vector<std::string> writeFailures(const FuzzSummary& summary,
                                       const std::string& dir);

}  // namespace cansim
