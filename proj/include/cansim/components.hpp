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

// The five protocol components as Mealy machines:
//   step(state, input cells at t, t) -> (output cells at t, next state)
//
// Every step is pure. Inputs outside a component's assumptions raise
// AssumptionViolation rather than producing unspecified output.

#pragma once

#include <optional>
#include <span>

#include "cansim/types.hpp"

namespace cansim {

// --- Buffer -----------------------------------------------------------------

struct BufferState {
  std::vector<AMessage> buf;  // sorted by id, FIFO among equal ids
  std::vector<AMessage> b;    // slot offered at odd ticks, |b| <= 1

  bool operator==(const BufferState&) const = default;
};

struct BufferStep {
  Cell<AMessage> as;
  BufferState next;
};

// Emits <> on even ticks and b on odd ticks. A request hands the slot the
// highest-priority pending message (or the fresh input when nothing is
// queued); without a request the input is queued via prAdd.
BufferStep bufferStep(const BufferState& st, const Cell<AMessage>& a,
                      const Cell<Req>& r, Tick t);

// --- Encoder ----------------------------------------------------------------

struct EncoderState {
  bool e = false;
  std::optional<Payload> pending;  // data(as(t-1)) while e is set

  bool operator==(const EncoderState&) const = default;
};

struct EncoderStep {
  Cell<Message> ms;
  EncoderState next;
};

// Identifier in the tick the message arrives, payload in the next one.
// Input while an encoding is in progress is a collision.
EncoderStep encoderStep(const EncoderState& st, const Cell<AMessage>& as,
                        Tick t);

// --- Decoder ----------------------------------------------------------------

struct DecoderState {
  bool d = false;
  std::optional<Ident> lastId;  // ft(mr(t-1)) while d is set

  bool operator==(const DecoderState&) const = default;
};

struct DecoderStep {
  Cell<AMessage> ar;
  DecoderState next;
};

DecoderStep decoderStep(const DecoderState& st, const Cell<Message>& mr,
                        Tick t);

// --- LogicalLayer -----------------------------------------------------------

struct LogicalLayerState {
  Ident lid{0};

  bool operator==(const LogicalLayerState&) const = default;
};

// Row of the logical-layer transition table that fired.
enum class LLRow : int {
  kIdle = 1,          // ms empty
  kArbitrate = 2,     // ms carries an identifier
  kNoVerdict = 3,     // ms carries data, wire silent
  kWon = 4,           // ms carries data, wire verdict is our identifier
  kLost = 5,          // ms carries data, wire verdict differs
};

enum class LLTableMode {
  kAmended,  // row 2 forwards the identifier to the wire
  kLiteral,  // row 2 emits <> on ws, as printed
};

struct LogicalLayerStep {
  Cell<Message> mr;
  Cell<Message> ws;
  Cell<Req> r;
  LLRow row = LLRow::kIdle;
  LogicalLayerState next;
};

LogicalLayerStep logicalLayerStep(const LogicalLayerState& st,
                                  const Cell<Message>& ms,
                                  const Cell<Message>& wr, Tick t,
                                  LLTableMode mode = LLTableMode::kAmended);

// --- Wire -------------------------------------------------------------------

struct WireState {
  std::vector<Message> latch;  // collectElements of the previous tick's ws

  bool operator==(const WireState&) const = default;
};

// wr(0) = <>, wr(t) = broadcast(latch) otherwise.
Cell<Message> wireOutput(const WireState& st, Tick t);

// Latches the ws cells of tick t. Throws AssumptionViolation when a cell
// carries more than one symbol or identifiers and data are mixed.
WireState wireLatch(std::span<const Cell<Message>> wsAll, Tick t);

struct WireStep {
  Cell<Message> wr;
  WireState next;
};

WireStep wireStep(const WireState& st, std::span<const Cell<Message>> wsAll,
                  Tick t);

}  // namespace cansim
