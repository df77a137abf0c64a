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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cansim/checkers.hpp"
#include "cansim/components.hpp"
#include "cansim/functions.hpp"
#include "cansim/fuzz.hpp"
#include "cansim/io.hpp"
#include "cansim/oracle.hpp"
#include "cansim/system.hpp"

namespace cansim {
namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

AMessage msg(std::uint64_t id, const char* hex = "") {
  return AMessage{Ident{id}, Payload::fromHex(hex)};
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failed = 0;

void emit(int criterion, const char* title, const Outcome& o) {
  std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", criterion,
              title, o.detail.c_str());
  if (!o.pass) ++g_failed;
}

// --- 1. axiom suite -----------------------------------------------------------

struct Axiom {
  const char* name;
  std::function<bool()> holds;
};

template <class F>
bool throws(F&& f) {
  try {
    f();
  } catch (const Error&) {
    return true;
  }
  return false;
}

std::vector<Axiom> axioms() {
  const Cell<Req> none{};
  const Cell<Req> req{kReq};
  const Payload p = Payload::fromHex("ab");
  return {
      {"TakeIds empty", [] { return takeIds(std::vector<AMessage>{}).empty(); }},
      {"TakeIds cons",
       [] {
         std::vector<AMessage> l{msg(4), msg(2)};
         return takeIds(l) == std::vector<Ident>{Ident{4}, Ident{2}};
       }},
      {"CollectElements zero",
       [] { return collectElements(0, std::vector<Cell<int>>{{1}}).empty(); }},
      {"CollectElements step",
       [] {
         std::vector<Cell<int>> s{{1}, {2, 3}};
         return collectElements(2, s) == std::vector<int>{2, 3, 1};
       }},
      {"MinNatList empty",
       [] { return minNatList(Ident{3}, std::vector<Ident>{}) == Ident{3}; }},
      {"MinNatList head smaller",
       [] { return minNatList(Ident{1}, std::vector<Ident>{Ident{4}}) == Ident{1}; }},
      {"MinNatList head larger",
       [] { return minNatList(Ident{5}, std::vector<Ident>{Ident{4}}) == Ident{4}; }},
      {"PrAdd empty",
       [] { return prAdd(std::vector<AMessage>{}, msg(2)) == std::vector<AMessage>{msg(2)}; }},
      {"PrAdd before greater",
       [] {
         std::vector<AMessage> b{msg(5)};
         return prAdd(b, msg(2)) == std::vector<AMessage>{msg(2), msg(5)};
       }},
      {"PrAdd after not-greater",
       [] {
         std::vector<AMessage> b{msg(2, "01")};
         return prAdd(b, msg(2, "02")) ==
                std::vector<AMessage>{msg(2, "01"), msg(2, "02")};
       }},
      {"Broadcast empty", [] { return broadcast(std::vector<Message>{}).empty(); }},
      {"Broadcast identifiers",
       [] {
         std::vector<Message> l{idSym(Ident{6}), idSym(Ident{2})};
         return broadcast(l) == std::vector<Message>{idSym(Ident{2})};
       }},
      {"Broadcast data",
       [p] {
         std::vector<Message> l{dataSym(p)};
         return broadcast(l) == l;
       }},
      {"Buffer even tick silent",
       [none] { return bufferStep({{}, {msg(1)}}, {}, none, 2).as.empty(); }},
      {"Buffer odd tick emits slot",
       [none] {
         return bufferStep({{}, {msg(1)}}, {}, none, 3).as == Cell<AMessage>{msg(1)};
       }},
      {"Buffer no request queues",
       [none] {
         auto s = bufferStep({{msg(4)}, {}}, {msg(2)}, none, 0);
         return s.next.buf == std::vector<AMessage>{msg(2), msg(4)} && s.next.b.empty();
       }},
      {"Buffer request empty queue",
       [req] {
         auto s = bufferStep({{}, {msg(9)}}, {msg(2)}, req, 0);
         return s.next.b == std::vector<AMessage>{msg(2)} && s.next.buf.empty();
       }},
      {"Buffer request nonempty queue",
       [req] {
         auto s = bufferStep({{msg(3), msg(5)}, {}}, {msg(4)}, req, 0);
         return s.next.b == std::vector<AMessage>{msg(3)} &&
                s.next.buf == std::vector<AMessage>{msg(4), msg(5)};
       }},
      {"Encoder idle", [] { return encoderStep({}, {}, 0).ms.empty(); }},
      {"Encoder start",
       [p] {
         auto s = encoderStep({}, {AMessage{Ident{5}, p}}, 1);
         return s.ms == Cell<Message>{idSym(Ident{5})} && s.next.e;
       }},
      {"Encoder finish",
       [p] {
         auto s = encoderStep({true, p}, {}, 2);
         return s.ms == Cell<Message>{dataSym(p)} && !s.next.e;
       }},
      {"Decoder idle", [] { return decoderStep({}, {}, 0).ar.empty(); }},
      {"Decoder identifier",
       [] {
         auto s = decoderStep({}, {idSym(Ident{5})}, 2);
         return s.ar.empty() && s.next.d && s.next.lastId == Ident{5};
       }},
      {"Decoder data",
       [p] {
         auto s = decoderStep({true, Ident{5}}, {dataSym(p)}, 3);
         return s.ar == Cell<AMessage>{AMessage{Ident{5}, p}} && !s.next.d;
       }},
      {"Wire initial silence",
       [] { return wireOutput({{idSym(Ident{1})}}, 0).empty(); }},
      {"Wire unit delay",
       [] {
         std::vector<Cell<Message>> ws{{idSym(Ident{3})}, {idSym(Ident{1})}};
         WireState st = wireLatch(ws, 4);
         return wireOutput(st, 5) == Cell<Message>{idSym(Ident{1})};
       }},
      {"Wire rejects mixing",
       [p] {
         std::vector<Cell<Message>> ws{{idSym(Ident{3})}, {dataSym(p)}};
         return throws([&] { wireLatch(ws, 0); });
       }},
      {"LLTable row 1",
       [] { return logicalLayerStep({}, {}, {}, 0).row == LLRow::kIdle; }},
      {"LLTable row 2",
       [] {
         auto s = logicalLayerStep({}, {idSym(Ident{5})}, {}, 1);
         return s.row == LLRow::kArbitrate && s.next.lid == Ident{5} &&
                s.ws == Cell<Message>{idSym(Ident{5})};
       }},
      {"LLTable row 3",
       [p] {
         auto s = logicalLayerStep({Ident{5}}, {dataSym(p)}, {}, 2);
         return s.row == LLRow::kNoVerdict && s.ws.empty() && s.r.empty();
       }},
      {"LLTable row 4",
       [p] {
         auto s = logicalLayerStep({Ident{5}}, {dataSym(p)}, {idSym(Ident{5})}, 2);
         return s.row == LLRow::kWon && s.ws == Cell<Message>{dataSym(p)} &&
                s.r == Cell<Req>{kReq};
       }},
      {"LLTable row 5",
       [p] {
         auto s = logicalLayerStep({Ident{5}}, {dataSym(p)}, {idSym(Ident{2})}, 2);
         return s.row == LLRow::kLost && s.ws.empty() && s.r.empty();
       }},
  };
}

Outcome criterion1() {
  const auto start = Clock::now();
  std::size_t held = 0;
  std::string broken;
  const auto list = axioms();
  for (const Axiom& a : list) {
    bool ok = false;
    try {
      ok = a.holds();
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok) {
      ++held;
    } else {
      broken += std::string(broken.empty() ? "" : ", ") + a.name;
    }
  }
  const double secs = secondsSince(start);
  Outcome o;
  o.pass = held == list.size() && secs < 1.0;
  o.detail = std::to_string(held) + "/" + std::to_string(list.size()) +
             " axioms hold in " + std::to_string(secs) + " s";
  if (!broken.empty()) o.detail += "; broken: " + broken;
  return o;
}

// --- 2. golden trace ----------------------------------------------------------

Outcome criterion2(const std::string& dataDir) {
  Outcome o;
  try {
    const Scenario s = loadScenario(dataDir + "/single_frame.json");
    const std::string golden = readFile(dataDir + "/single_frame.jsonl");
    const Trace a = runScenario(s);
    const Trace b = runScenario(s);
    const std::string ta = traceToJsonl(a);
    const bool stable = ta == traceToJsonl(b);
    const bool identical = ta == golden;
    const bool cells = a.ar[0].at(3) == Cell<AMessage>{msg(5, "ab")} &&
                       a.r[0].at(3) == Cell<Req>{kReq};
    o.pass = stable && identical && cells;
    o.detail = std::string("byte-identical to golden: ") +
               (identical ? "yes" : "no") + ", repeat run stable: " +
               (stable ? "yes" : "no") + ", ar_1(3) and r_1(3): " +
               (cells ? "as expected" : "wrong");
  } catch (const Error& e) {
    o.detail = e.what();
  }
  return o;
}

// --- 3 and 6. fuzz corpus -----------------------------------------------------

std::vector<Scenario> corpus() {
  FuzzConfig c;
  c.seed = 2026;
  c.minNodes = 2;
  c.maxNodes = 5;
  c.horizon = 64;
  std::vector<Scenario> out;
  for (std::size_t i = 0; i < 1000; ++i) out.push_back(generateScenario(c.seed, i, c));
  return out;
}

Outcome criterion3(const std::vector<Scenario>& scenarios,
                   const std::vector<Trace>& traces, double runSecs) {
  const auto start = Clock::now();
  CheckConfig config;
  config.predicates = kPredAll & ~kPredStructural;
  config.latency = 2;
  std::size_t violations = 0;
  std::size_t warnings = 0;
  std::size_t failedRuns = 0;
  std::size_t evaluations = 0;
  for (const Trace& t : traces) {
    if (t.failure) ++failedRuns;
    const Report r = checkAll(t, config);
    violations += r.violationCount();
    warnings += r.warnings.size();
    for (const auto& p : r.results) evaluations += p.evaluations;
  }
  const double secs = runSecs + secondsSince(start);
  Outcome o;
  o.pass = violations == 0 && failedRuns == 0 && secs < 10.0 &&
           traces.size() == scenarios.size();
  o.detail = std::to_string(traces.size()) + " scenarios, " +
             std::to_string(evaluations) + " predicate scopes, " +
             std::to_string(violations) + " violations, " +
             std::to_string(warnings) + " warnings, " +
             std::to_string(failedRuns) + " failed runs in " +
             std::to_string(secs) + " s";
  return o;
}

Outcome criterion6(const std::vector<Trace>& traces) {
  std::size_t violations = 0;
  for (const Trace& t : traces) violations += checkStructural(t).size();
  Outcome o;
  o.pass = violations == 0 && !traces.empty();
  o.detail = std::to_string(violations) + " structural violations over " +
             std::to_string(traces.size()) + " traces";
  return o;
}

// --- 4. exhaustive oracle equivalence -----------------------------------------

// Every placement of identifiers 1..4 (each absent or at one of the six
// node/tick slots), at most two per node, no two on the same slot.
std::vector<Scenario> exhaustiveFamily() {
  struct Slot {
    std::size_t node;
    Tick tick;
  };
  std::vector<Slot> slots;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (Tick t = 0; t <= 2; ++t) slots.push_back({n, t});
  }
  std::vector<Scenario> out;
  std::vector<int> choice(4, -1);  // -1 absent, else slot index
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == choice.size()) {
      Scenario s;
      s.nodeCount = 2;
      s.horizon = 16;
      std::vector<int> perNode(3, 0);
      std::vector<bool> taken(slots.size(), false);
      for (std::size_t id = 0; id < choice.size(); ++id) {
        if (choice[id] < 0) continue;
        const Slot& sl = slots[choice[id]];
        if (taken[choice[id]] || ++perNode[sl.node] > 2) return;
        taken[choice[id]] = true;
        const std::uint8_t byte = static_cast<std::uint8_t>(0xa0 + id);
        s.injections.push_back({NodeId{sl.node}, sl.tick,
                                AMessage{Ident{id + 1}, Payload({byte})}});
      }
      out.push_back(std::move(s));
      return;
    }
    for (int c = -1; c < static_cast<int>(slots.size()); ++c) {
      choice[k] = c;
      place(k + 1);
    }
  };
  place(0);
  return out;
}

Outcome criterion4() {
  const auto start = Clock::now();
  const std::vector<Scenario> family = exhaustiveFamily();
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::string first;
  for (Tick boot = 0; boot <= 3; ++boot) {
    for (Scenario s : family) {
      s.options.bootstrapRequestTick = boot;
      ++cases;
      const Verdict v = compareWithSimulator(s);
      if (!v.equivalent) {
        if (first.empty()) first = scenarioToJson(s) + v.firstDivergence;
        ++mismatches;
      }
    }
  }
  const double secs = secondsSince(start);
  Outcome o;
  o.pass = mismatches == 0 && family.size() == 853 && secs < 30.0;
  o.detail = std::to_string(family.size()) + " scenarios x 4 priming ticks = " +
             std::to_string(cases) + " cases, " + std::to_string(mismatches) +
             " mismatches in " + std::to_string(secs) + " s";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

// --- 5. negative controls -----------------------------------------------------

Outcome criterion5(const std::string& dataDir) {
  Outcome o;
  try {
    const Scenario golden = loadScenario(dataDir + "/single_frame.json");

    // (a) literal row 2: the identifier never reaches the wire.
    Scenario literal = golden;
    literal.options.fidelityMode = true;
    const Trace ta = runScenario(literal);
    const Report ra = checkAll(ta);
    bool stall = false;
    for (const auto& w : ra.warnings) stall = stall || w.predicate == "stall";
    const bool row3 = !checkRow3Unreachable(ta).empty();
    const bool a = deliveries(ta).empty() && (row3 || stall) && !ta.failure;

    // (b) no priming: buffers are never asked for a message.
    Scenario unprimed = golden;
    unprimed.options.bootstrapRequestTick.reset();
    unprimed.horizon = 32;
    const Trace tb = runScenario(unprimed);
    bool offered = false;
    for (Tick t = 0; t < tb.horizon(); ++t) offered |= !tb.as[0].at(t).empty();
    const bool b = deliveries(tb).empty() && !offered && !tb.failure;

    // (c) flipped delivery cell on one node.
    Scenario two;
    two.nodeCount = 2;
    two.horizon = 8;
    two.injections = {{NodeId{1}, 0, msg(5, "ab")}, {NodeId{2}, 0, msg(7, "cd")}};
    Trace tc = runScenario(two);
    const bool cleanBefore = checkMessageTransmission(tc).violations.empty();
    tc.ar[1].at(3) = {msg(5, "ff")};
    const auto vc = checkMessageTransmission(tc).violations;
    bool axiom2 = false;
    for (const auto& v : vc) {
      axiom2 = axiom2 || (v.predicate == "transmission/axiom2" && v.tick == 3);
    }
    const bool c = cleanBefore && axiom2;

    o.pass = a && b && c;
    o.detail = std::string("(a) literal table: ") +
               std::to_string(deliveries(ta).size()) + " deliveries, row 3 " +
               (row3 ? "fired" : "silent") + ", stall " + (stall ? "reported" : "not reported") +
               "; (b) no priming: " + std::to_string(deliveries(tb).size()) +
               " deliveries; (c) flipped ar cell: " +
               (axiom2 ? "caught by axiom 2" : "missed");
  } catch (const Error& e) {
    o.detail = e.what();
  }
  return o;
}

}  // namespace
}  // namespace cansim

int main(int argc, char** argv) {
  using namespace cansim;
  const std::string dataDir = argc > 1 ? argv[1] : CANSIM_TEST_DATA;

  emit(1, "axiom suite", criterion1());
  emit(2, "golden trace", criterion2(dataDir));

  const std::vector<Scenario> scenarios = corpus();
  const auto runStart = Clock::now();
  std::vector<Trace> traces;
  try {
    traces = runBatch(scenarios);
  } catch (const Error& e) {
    std::printf("corpus run failed: %s\n", e.what());
  }
  const double runSecs = secondsSince(runStart);
  emit(3, "transmission sweep", criterion3(scenarios, traces, runSecs));
  emit(4, "exhaustive oracle equivalence", criterion4());
  emit(5, "negative controls", criterion5(dataDir));
  emit(6, "structural invariants", criterion6(traces));

  std::printf("%d of 6 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
