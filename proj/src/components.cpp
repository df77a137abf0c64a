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

#include "cansim/components.hpp"

#include <string>

#include "cansim/functions.hpp"
#include "cansim/stream.hpp"

namespace cansim {

namespace {

std::string at(Tick t) { return " at tick " + std::to_string(t); }

template <class M>
void requireMsg1(const Cell<M>& cell, const char* who, const char* stream,
                 Tick t) {
  if (cell.size() > 1) {
    throw AssumptionViolation(std::string(who) + ": " + stream + " carries " +
                              std::to_string(cell.size()) + " messages" +
                              at(t));
  }
}

}  // namespace

BufferStep bufferStep(const BufferState& st, const Cell<AMessage>& a,
                      const Cell<Req>& r, Tick t) {
  requireMsg1(a, "buffer", "a", t);

  BufferStep out;
  if (t % 2 == 1) out.as = st.b;

  std::vector<AMessage> newbuf = a.empty() ? st.buf : prAdd(st.buf, ft(a));
  if (r.empty()) {
    out.next.b = st.b;
    out.next.buf = std::move(newbuf);
  } else if (st.buf.empty()) {
    out.next.b = a;
  } else {
    out.next.b = {ft(newbuf)};
    out.next.buf = rt(newbuf);
  }
  return out;
}

EncoderStep encoderStep(const EncoderState& st, const Cell<AMessage>& as,
                        Tick t) {
  requireMsg1(as, "encoder", "as", t);

  EncoderStep out;
  if (st.e) {
    if (!as.empty()) {
      throw AssumptionViolation(
          "encoder: new message " + toString(as.front()) +
          " arrived while the previous payload is still pending" + at(t));
    }
    out.ms = {dataSym(st.pending.value_or(Payload{}))};
    return out;  // e' = false
  }
  if (as.empty()) return out;

  const AMessage& m = ft(as);
  out.ms = {idSym(m.id)};
  out.next.e = true;
  out.next.pending = m.data;
  return out;
}

DecoderStep decoderStep(const DecoderState& st, const Cell<Message>& mr,
                        Tick t) {
  requireMsg1(mr, "decoder", "mr", t);

  DecoderStep out;
  if (mr.empty()) return out;

  const Message& sym = ft(mr);
  if (!st.d) {
    if (!isIdSym(sym)) {
      throw AssumptionViolation("decoder: data symbol without a preceding "
                                "identifier" + at(t));
    }
    out.next.d = true;
    out.next.lastId = asIdent(sym);
    return out;
  }
  if (!isDataSym(sym)) {
    throw AssumptionViolation("decoder: identifier " + toString(sym) +
                              " where a data symbol was expected" + at(t));
  }
  out.ar = {AMessage{st.lastId.value_or(Ident{}), asPayload(sym)}};
  return out;
}

LogicalLayerStep logicalLayerStep(const LogicalLayerState& st,
                                  const Cell<Message>& ms,
                                  const Cell<Message>& wr, Tick t,
                                  LLTableMode mode) {
  requireMsg1(ms, "logical layer", "ms", t);
  requireMsg1(wr, "logical layer", "wr", t);

  LogicalLayerStep out;
  out.mr = wr;
  out.next = st;

  if (ms.empty()) {
    out.row = LLRow::kIdle;
    return out;
  }
  const Message& x = ft(ms);
  if (isIdSym(x)) {
    out.row = LLRow::kArbitrate;
    if (mode == LLTableMode::kAmended) out.ws = ms;
    out.next.lid = asIdent(x);
    return out;
  }
  if (wr.empty()) {
    out.row = LLRow::kNoVerdict;
    return out;
  }
  const Message& y = ft(wr);
  if (isIdSym(y) && asIdent(y) == st.lid) {
    out.row = LLRow::kWon;
    out.ws = ms;
    out.r = {kReq};
  } else {
    out.row = LLRow::kLost;
  }
  return out;
}

Cell<Message> wireOutput(const WireState& st, Tick t) {
  if (t == 0) return {};
  return broadcast(st.latch);
}

WireState wireLatch(std::span<const Cell<Message>> wsAll, Tick t) {
  std::optional<std::size_t> idNode;
  std::optional<std::size_t> dataNode;
  for (std::size_t i = 0; i < wsAll.size(); ++i) {
    requireMsg1(wsAll[i], "wire", ("ws_" + std::to_string(i + 1)).c_str(), t);
    if (wsAll[i].empty()) continue;
    (isIdSym(wsAll[i].front()) ? idNode : dataNode) = i;
  }
  if (idNode && dataNode) {
    throw AssumptionViolation(
        "wire: ws_" + std::to_string(*idNode + 1) +
        " carries an identifier while ws_" + std::to_string(*dataNode + 1) +
        " carries data" + at(t));
  }
  return WireState{collectElements(wsAll.size(), wsAll)};
}

WireStep wireStep(const WireState& st, std::span<const Cell<Message>> wsAll,
                  Tick t) {
  return WireStep{wireOutput(st, t), wireLatch(wsAll, t)};
}

}  // namespace cansim
