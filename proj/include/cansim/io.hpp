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

// Scenario, trace and report documents.
//
// Scenario: one JSON object
//   {"nodeCount": 2, "horizon": 8,
//    "injections": [{"node": 1, "tick": 0, "id": 3, "data": "c0ffee"}],
//    "options": {"bootstrapRequestTick": 0, "reqDelay": 1, "mtLatency": 2,
//                "fidelityMode": false, "maxPayload": 8}}
// Every field except nodeCount and horizon is optional. Unknown fields are
// rejected.
//
// Trace: JSON lines. A header line, one line per tick, and an end line:
//   {"format":"cansim-trace","version":1,"kind":"system","scenario":{...}}
//   {"t":0,"wr":[],"latch":[],"nodes":[{"a":["msg(5,ab)"],"as":[],...}]}
//   {"end":{"ticks":6,"failure":null}}
// Cells are arrays of symbols: "msg(<id>,<hex>)" for application messages,
// "id:<n>" / "data:<hex>" for wire symbols and "req" for requests. Output is
// byte-deterministic for a given trace.

#pragma once

#include <string>
#include <string_view>

#include "cansim/checkers.hpp"
#include "cansim/trace.hpp"
#include "cansim/types.hpp"

namespace cansim {

std::string scenarioToJson(const Scenario& scenario);
// Throws ParseError naming the offending field.
Scenario parseScenario(std::string_view text);

std::string traceToJsonl(const Trace& trace);
// Throws ParseError naming the offending line and field.
Trace parseTrace(std::string_view text);

std::string reportToJson(const Report& report);

AMessage parseAMessage(std::string_view token);
Message parseMessage(std::string_view token);

// Whole-file helpers. Throw IoError.
std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view contents);

Scenario loadScenario(const std::string& path);
void saveScenario(const std::string& path, const Scenario& scenario);
Trace loadTrace(const std::string& path);
void saveTrace(const std::string& path, const Trace& trace);

}  // namespace cansim
