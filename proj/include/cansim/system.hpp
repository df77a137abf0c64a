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

// Composition of the components into controllers, the CAN bus and the full
// buffered system, plus the synchronous executor that produces traces.
//
// Within one tick the evaluation order is fixed:
//   1. buffers emit as_i(t) from their state
//   2. encoders turn as_i(t) into ms_i(t)
//   3. the wire emits wr(t) from its latch
//   4. logical layers consume ms_i(t), wr(t) and emit ws_i, mr_i, lr_i
//   5. decoders turn mr_i(t) into ar_i(t)
//   6. states advance: the wire latches ws(t), each request delay line
//      shifts in lr_i(t), and each buffer consumes a_i(t) together with
//      lr_i(t) (plus the executor's priming request, if any).
// The only feedback loops (logical layer -> wire -> logical layer and
// logical layer -> buffer -> encoder) each pass through a state update, so
// the order is well defined.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cansim/components.hpp"
#include "cansim/trace.hpp"
#include "cansim/types.hpp"

namespace cansim {

struct SystemConfig {
  LLTableMode table = LLTableMode::kAmended;
  // Idle buffers (empty slot) receive a request on every tick >= primeFrom.
  std::optional<Tick> primeFrom = Tick{0};
};

SystemConfig systemConfig(const ScenarioOptions& options);

struct NodeCells {
  Cell<AMessage> a;
  Cell<AMessage> as;
  Cell<Message> ms;
  Cell<Message> ws;
  Cell<Message> mr;
  Cell<Req> lr;
  Cell<Req> r;
  Cell<AMessage> ar;
  LLRow row = LLRow::kIdle;
  bool primed = false;

  bool operator==(const NodeCells&) const = default;
};

struct TickCells {
  Tick t = 0;
  Cell<Message> wr;
  std::vector<NodeCells> nodes;

  bool operator==(const TickCells&) const = default;
};

struct TickResult {
  TickCells cells;
  SystemState next;
};

// A component failure annotated with where it happened.
class ComponentError : public Error {
 public:
  explicit ComponentError(ComponentFailure failure);

  const ComponentFailure& failure() const { return failure_; }

 private:
  ComponentFailure failure_;
};

// One synchronous step of the buffered system. `injections[i]` is a_{i+1}(t).
TickResult tickSystem(const SystemState& st,
                      std::span<const Cell<AMessage>> injections, Tick t,
                      const SystemConfig& config);

// One step of the bare CAN component. `as[i]` is as_{i+1}(t); buffer states
// are carried through untouched.
TickResult tickCan(const SystemState& st, std::span<const Cell<AMessage>> as,
                   Tick t, const SystemConfig& config);

// Throws ScenarioError when validateScenario reports violations. A component
// failure mid-run ends the trace early with `failure` set.
Trace runScenario(const Scenario& scenario);

struct CanOnlyOptions {
  std::size_t reqDelay = 1;
  LLTableMode table = LLTableMode::kAmended;
  // Reject input that buffers could never produce: more than one message
  // per tick, messages at even ticks, equal identifiers in the same tick.
  bool enforceDiscipline = true;
};

// Drives controllers and wire directly from the given as streams, each of
// which must span `horizon` ticks.
Trace runCANOnly(std::span<const TimedStream<AMessage>> asStreams,
                 std::size_t horizon, const CanOnlyOptions& options = {});

// Independent runs, evaluated on up to `threads` workers (0 = hardware
// concurrency). Result order matches input order.
std::vector<Trace> runBatch(std::span<const Scenario> scenarios,
                            unsigned threads = 0);

}  // namespace cansim
