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

// Trace-level validators for the stream predicates of the protocol model.
//
// Streams are finite, so a predicate quantified over all ticks is checked at
// every tick whose referenced offsets (t-1, t+1, t+latency) fall inside the
// horizon. Ticks near the edges are skipped, never assumed to pass.
// Checkers never modify the trace.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cansim/trace.hpp"

namespace cansim {

struct Violation {
  std::string predicate;
  Tick tick = 0;
  std::vector<std::string> streams;
  std::string expected;
  std::string observed;

  bool operator==(const Violation&) const = default;
};

struct Warning {
  std::string predicate;
  std::optional<Tick> tick;
  std::string detail;

  bool operator==(const Warning&) const = default;
};

// One violation per tick whose cell holds more than one message.
std::vector<Violation> checkMsg1(const Trace& trace, std::string_view stream);

// Frame format on a Message stream: an identifier is followed by data in the
// next tick, and data is preceded by an identifier in the previous tick.
std::vector<Violation> checkMsgCANFormat(const Trace& trace,
                                         std::string_view stream);

// No tick mixes identifier and data symbols across the ws_i.
std::vector<Violation> checkWireAssumptions(const Trace& trace);

struct TransmissionCheck {
  std::vector<Violation> violations;
  std::vector<Warning> warnings;  // duplicate winning identifiers
};

// Frame delivery contract at the CAN boundary (as_i, ar_i, r_i):
//   1. a tick with no offers yields no deliveries `latency` ticks later;
//   2. all ar_i agree at every tick;
//   3. the offer with the minimal identifier is requested back and delivered
//      to every node `latency` ticks later.
// Throws HorizonError when latency >= horizon.
TransmissionCheck checkMessageTransmission(const Trace& trace,
                                           std::size_t latency = 2);

// One violation for every tick/node where the logical layer took row 3.
std::vector<Violation> checkRow3Unreachable(const Trace& trace);

// State-level invariants from the per-tick snapshots: sorted buffer queue,
// |b| <= 1, pending iff e, lastId iff d, equal ar cells across nodes,
// mr_i = wr.
std::vector<Violation> checkStructural(const Trace& trace);

enum Predicate : unsigned {
  kPredMsg1 = 1u << 0,
  kPredMsgCANFormat = 1u << 1,
  kPredWire = 1u << 2,
  kPredTransmission = 1u << 3,
  kPredRow3 = 1u << 4,
  kPredStructural = 1u << 5,
  kPredAll = (1u << 6) - 1,
};

// "msg1", "msg-can-format", "wire", "transmission", "row3", "structural".
std::string_view predicateName(Predicate p);
std::optional<Predicate> predicateFromName(std::string_view name);

struct CheckConfig {
  unsigned predicates = kPredAll;
  // Defaults to the trace's scenario mtLatency.
  std::optional<std::size_t> latency;
};

enum class CheckStatus { kPass, kFail, kSkipped };

struct PredicateResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::size_t evaluations = 0;  // stream/tick scopes examined
  std::vector<Violation> violations;
  std::string note;
};

struct Report {
  std::vector<PredicateResult> results;
  std::vector<Warning> warnings;

  std::size_t violationCount() const;
  // Zero violations, and with `strict` also zero warnings.
  bool passed(bool strict = false) const;
};

Report checkAll(const Trace& trace, const CheckConfig& config = {});

std::string renderText(const Report& report);

}  // namespace cansim
