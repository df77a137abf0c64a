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

#include "cansim/trace.hpp"

#include <charconv>

namespace cansim {

SystemState initialSystemState(std::size_t nodeCount, std::size_t reqDelay) {
  SystemState st;
  st.nodes.resize(nodeCount);
  for (NodeState& node : st.nodes) {
    node.requestLine.assign(reqDelay, Cell<Req>{});
  }
  return st;
}

Trace emptyTrace(const Scenario& scenario, TraceKind kind) {
  const std::size_t n = scenario.nodeCount;
  Trace trace;
  trace.scenario = scenario;
  trace.kind = kind;
  trace.a.resize(n);
  trace.as.resize(n);
  trace.ar.resize(n);
  trace.r.resize(n);
  trace.lr.resize(n);
  trace.ms.resize(n);
  trace.ws.resize(n);
  trace.mr.resize(n);
  trace.rows.resize(n);
  trace.primed.resize(n);
  return trace;
}

std::size_t StreamRef::cellSize(Tick t) const {
  switch (type) {
    case StreamType::kAMessage:
      return amessages->at(t).size();
    case StreamType::kMessage:
      return messages->at(t).size();
    case StreamType::kReq:
      return requests->at(t).size();
  }
  return 0;
}

StreamRef findStream(const Trace& trace, std::string_view name) {
  if (name == "wr") return StreamRef{StreamType::kMessage, nullptr, &trace.wr};

  const auto sep = name.rfind('_');
  std::size_t index = 0;
  if (sep == std::string_view::npos || sep + 1 == name.size() ||
      std::from_chars(name.data() + sep + 1, name.data() + name.size(), index)
              .ptr != name.data() + name.size() ||
      index < 1 || index > trace.nodeCount()) {
    throw ContractError("unknown stream '" + std::string(name) + "'");
  }
  const std::string_view family = name.substr(0, sep);
  const std::size_t i = index - 1;
  if (family == "a") return {StreamType::kAMessage, &trace.a[i]};
  if (family == "as") return {StreamType::kAMessage, &trace.as[i]};
  if (family == "ar") return {StreamType::kAMessage, &trace.ar[i]};
  if (family == "ms") return {StreamType::kMessage, nullptr, &trace.ms[i]};
  if (family == "ws") return {StreamType::kMessage, nullptr, &trace.ws[i]};
  if (family == "mr") return {StreamType::kMessage, nullptr, &trace.mr[i]};
  if (family == "r") return {StreamType::kReq, nullptr, nullptr, &trace.r[i]};
  if (family == "lr") return {StreamType::kReq, nullptr, nullptr, &trace.lr[i]};
  throw ContractError("unknown stream '" + std::string(name) + "'");
}

std::vector<Delivery> deliveries(const Trace& trace, NodeId node) {
  if (node.index < 1 || node.index > trace.nodeCount()) {
    throw ContractError("node " + std::to_string(node.index) +
                        " is not part of the trace");
  }
  std::vector<Delivery> out;
  const TimedStream<AMessage>& ar = trace.ar[node.index - 1];
  for (Tick t = 0; t < ar.horizon(); ++t) {
    for (const AMessage& m : ar.at(t)) out.push_back({t, m});
  }
  return out;
}

}  // namespace cansim
