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

#include "cansim/fuzz.hpp"

#include <filesystem>
#include <random>
#include <set>

#include "cansim/io.hpp"
#include "cansim/system.hpp"
#include "parallel.hpp"

namespace cansim {

namespace {

constexpr std::uint64_t kIdSpace = 2048;  // standard 11-bit identifiers

// Uniform draw from [0, bound) by rejection. std::uniform_int_distribution
// is implementation-defined and would make scenarios platform-dependent.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = rng.max() - rng.max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::mt19937_64 engineFor(std::uint64_t seed, std::size_t index) {
  const std::uint64_t k = index;
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k),
                    static_cast<std::uint32_t>(k >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Scenario generateScenario(std::uint64_t seed, std::size_t index,
                          const FuzzConfig& config) {
  std::mt19937_64 rng = engineFor(seed, index);
  Scenario s;
  s.nodeCount = config.minNodes + draw(rng, config.maxNodes - config.minNodes + 1);
  s.horizon = config.horizon;

  // Per-scenario load: each node offers at an odd tick with probability
  // density/8, density in [1, 4].
  const std::uint64_t density = 1 + draw(rng, 4);
  std::set<std::uint64_t> used;
  for (Tick t = 1; t < s.horizon; t += 2) {
    for (std::size_t node = 1; node <= s.nodeCount; ++node) {
      if (draw(rng, 8) >= density || used.size() == kIdSpace) continue;
      std::uint64_t id;
      do {
        id = draw(rng, kIdSpace);
      } while (!used.insert(id).second);
      std::vector<std::uint8_t> bytes(draw(rng, kDefaultMaxPayload + 1));
      for (auto& b : bytes) b = static_cast<std::uint8_t>(draw(rng, 256));
      s.injections.push_back(
          {NodeId{node}, t, AMessage{Ident{id}, Payload(std::move(bytes))}});
    }
  }
  return s;
}

CaseResult evaluateScenario(const Scenario& scenario, std::size_t index) {
  CaseResult out;
  out.index = index;
  out.scenario = scenario;
  try {
    const Trace trace = runScenario(scenario);
    out.report = checkAll(trace);
    out.verdict = compareDeliveries(deliveries(trace), oracleRun(scenario).log);
    if (trace.failure) out.error = "run stopped: " + trace.failure->message;
  } catch (const Error& e) {
    out.error = e.what();
  }
  out.passed = out.error.empty() && out.report.passed() && out.verdict.equivalent;
  return out;
}

std::string FuzzSummary::render() const {
  std::string out;
  for (const CaseResult& c : failures) {
    out += "FAIL scenario " + std::to_string(c.index) + ":";
    if (!c.error.empty()) out += " " + c.error;
    if (c.report.violationCount() > 0) {
      out += " " + std::to_string(c.report.violationCount()) + " violation(s)";
    }
    if (!c.verdict.equivalent) out += " oracle mismatch (" + c.verdict.firstDivergence + ")";
    out += "\n";
  }
  out += std::to_string(passed) + "/" + std::to_string(total) +
         " scenarios passed (seed " + std::to_string(seed) + ")\n";
  return out;
}

FuzzSummary runFuzz(const FuzzConfig& config) {
  if (config.minNodes < 1 || config.minNodes > config.maxNodes) {
    throw ContractError("fuzz: node range must satisfy 1 <= min <= max");
  }
  if (config.horizon < 4) throw ContractError("fuzz: horizon must be at least 4");

  std::vector<CaseResult> results(config.count);
  detail::parallelFor(config.count, config.threads, [&](std::size_t i) {
    results[i] = evaluateScenario(generateScenario(config.seed, i, config), i);
  });

  FuzzSummary summary;
  summary.seed = config.seed;
  summary.total = config.count;
  for (CaseResult& r : results) {
    if (r.passed) {
      ++summary.passed;
    } else {
      summary.failures.push_back(std::move(r));
    }
  }
  return summary;
}

std::vector<std::string> writeFailures(const FuzzSummary& summary,
                                       const std::string& dir) {
  std::vector<std::string> paths;
  if (summary.failures.empty()) return paths;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
  for (const CaseResult& c : summary.failures) {
    const std::string path = (std::filesystem::path(dir) /
                              ("fuzz-" + std::to_string(summary.seed) + "-" +
                               std::to_string(c.index) + ".json"))
                                 .string();
    saveScenario(path, c.scenario);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace cansim
