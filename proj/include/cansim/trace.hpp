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

// Full record of a run: every named stream, the table row each logical layer
// took, and the component states each tick was evaluated in.

#pragma once

#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cansim/components.hpp"
#include "cansim/types.hpp"

namespace cansim {

struct NodeState {
  BufferState buffer;
  EncoderState encoder;
  DecoderState decoder;
  LogicalLayerState logical;
  // Request delay line; front() is the cell released this tick.
  std::deque<Cell<Req>> requestLine;

  bool operator==(const NodeState&) const = default;
};

struct SystemState {
  std::vector<NodeState> nodes;
  WireState wire;

  bool operator==(const SystemState&) const = default;
};

SystemState initialSystemState(std::size_t nodeCount, std::size_t reqDelay);

enum class TraceKind {
  kSystem,   // buffers + CAN
  kCanOnly,  // CAN driven directly from as streams
};

// A component rejected its input mid-run.
struct ComponentFailure {
  Tick tick = 0;
  std::optional<NodeId> node;
  std::string component;
  std::string message;

  bool operator==(const ComponentFailure&) const = default;
};

struct Delivery {
  Tick tick = 0;
  AMessage message;

  bool operator==(const Delivery&) const = default;
};

struct Trace {
  Scenario scenario;
  TraceKind kind = TraceKind::kSystem;

  // Per node, indexed [node - 1].
  std::vector<TimedStream<AMessage>> a;   // application -> buffer
  std::vector<TimedStream<AMessage>> as;  // buffer -> CAN
  std::vector<TimedStream<AMessage>> ar;  // CAN -> application
  std::vector<TimedStream<Req>> r;        // CAN boundary requests (delayed)
  std::vector<TimedStream<Req>> lr;       // logical layer requests (buffer feed)
  std::vector<TimedStream<Message>> ms;   // encoder -> logical layer
  std::vector<TimedStream<Message>> ws;   // logical layer -> wire
  std::vector<TimedStream<Message>> mr;   // logical layer -> decoder
  TimedStream<Message> wr;                // wire -> every logical layer

  std::vector<std::vector<LLRow>> rows;   // [node - 1][t]
  std::vector<std::vector<bool>> primed;  // [node - 1][t] executor request
  std::vector<SystemState> snapshots;     // state each tick started from

  std::optional<ComponentFailure> failure;

  std::size_t horizon() const { return wr.horizon(); }
  std::size_t nodeCount() const { return ar.size(); }

  bool operator==(const Trace&) const = default;
};

// Empty trace with `nodeCount` node slots and no ticks recorded.
Trace emptyTrace(const Scenario& scenario, TraceKind kind);

// Stream families the checkers can address by name ("as_2", "wr", ...).
enum class StreamType { kAMessage, kMessage, kReq };

struct StreamRef {
  StreamType type;
  const TimedStream<AMessage>* amessages = nullptr;
  const TimedStream<Message>* messages = nullptr;
  const TimedStream<Req>* requests = nullptr;

  std::size_t cellSize(Tick t) const;
};

// Resolves "a_i", "as_i", "ar_i", "r_i", "lr_i", "ms_i", "ws_i", "mr_i"
// (1-based i) and "wr". Throws ContractError for unknown names.
StreamRef findStream(const Trace& trace, std::string_view name);

// Every message appearing on ar_node, in tick order.
std::vector<Delivery> deliveries(const Trace& trace, NodeId node = NodeId{1});

}  // namespace cansim
