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

#include "cansim/system.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

#include "parallel.hpp"

namespace cansim {

namespace {

std::string describe(const ComponentFailure& f) {
  std::string out = f.component + " failed at tick " + std::to_string(f.tick);
  if (f.node) out += " on node " + std::to_string(f.node->index);
  return out + ": " + f.message;
}

// Runs `fn`, rethrowing component-level errors with tick/node provenance.
template <class Fn>
auto guarded(const char* component, std::optional<std::size_t> node, Tick t,
             Fn&& fn) {
  try {
    return fn();
  } catch (const AssumptionViolation& e) {
    throw ComponentError(ComponentFailure{
        t, node ? std::optional<NodeId>(NodeId{*node + 1}) : std::nullopt,
        component, e.what()});
  } catch (const ContractError& e) {
    throw ComponentError(ComponentFailure{
        t, node ? std::optional<NodeId>(NodeId{*node + 1}) : std::nullopt,
        component, e.what()});
  }
}

// Steps 2-5 of the tick plus the CAN-side state updates. `cells.nodes[i].as`
// must already hold as_i(t).
void stepControllers(const SystemState& st, TickCells& cells,
                     SystemState& next, const SystemConfig& config) {
  const Tick t = cells.t;
  const std::size_t n = st.nodes.size();

  for (std::size_t i = 0; i < n; ++i) {
    auto enc = guarded("encoder", i, t, [&] {
      return encoderStep(st.nodes[i].encoder, cells.nodes[i].as, t);
    });
    cells.nodes[i].ms = std::move(enc.ms);
    next.nodes[i].encoder = std::move(enc.next);
  }

  cells.wr = guarded("wire", std::nullopt, t,
                     [&] { return wireOutput(st.wire, t); });

  std::vector<Cell<Message>> wsAll(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeCells& nc = cells.nodes[i];
    auto ll = guarded("logical layer", i, t, [&] {
      return logicalLayerStep(st.nodes[i].logical, nc.ms, cells.wr, t,
                              config.table);
    });
    nc.mr = std::move(ll.mr);
    nc.ws = std::move(ll.ws);
    nc.lr = std::move(ll.r);
    nc.row = ll.row;
    next.nodes[i].logical = ll.next;
    wsAll[i] = nc.ws;
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto dec = guarded("decoder", i, t, [&] {
      return decoderStep(st.nodes[i].decoder, cells.nodes[i].mr, t);
    });
    cells.nodes[i].ar = std::move(dec.ar);
    next.nodes[i].decoder = std::move(dec.next);
  }

  next.wire = guarded("wire", std::nullopt, t,
                      [&] { return wireLatch(wsAll, t); });

  for (std::size_t i = 0; i < n; ++i) {
    std::deque<Cell<Req>>& line = next.nodes[i].requestLine;
    if (line.empty()) {
      cells.nodes[i].r = cells.nodes[i].lr;
    } else {
      cells.nodes[i].r = line.front();
      line.pop_front();
      line.push_back(cells.nodes[i].lr);
    }
  }
}

void appendTick(Trace& trace, const TickCells& cells) {
  trace.wr.push_back(cells.wr);
  for (std::size_t i = 0; i < cells.nodes.size(); ++i) {
    const NodeCells& nc = cells.nodes[i];
    trace.a[i].push_back(nc.a);
    trace.as[i].push_back(nc.as);
    trace.ms[i].push_back(nc.ms);
    trace.ws[i].push_back(nc.ws);
    trace.mr[i].push_back(nc.mr);
    trace.lr[i].push_back(nc.lr);
    trace.r[i].push_back(nc.r);
    trace.ar[i].push_back(nc.ar);
    trace.rows[i].push_back(nc.row);
    trace.primed[i].push_back(nc.primed);
  }
}

std::string joinViolations(const std::vector<ScenarioViolation>& vs) {
  std::string out = "invalid scenario:";
  for (const ScenarioViolation& v : vs) out += "\n  " + toString(v);
  return out;
}

}  // namespace

ComponentError::ComponentError(ComponentFailure failure)
    : Error(describe(failure)), failure_(std::move(failure)) {}

SystemConfig systemConfig(const ScenarioOptions& options) {
  SystemConfig config;
  config.table =
      options.fidelityMode ? LLTableMode::kLiteral : LLTableMode::kAmended;
  config.primeFrom = options.bootstrapRequestTick;
  return config;
}

TickResult tickCan(const SystemState& st, std::span<const Cell<AMessage>> as,
                   Tick t, const SystemConfig& config) {
  const std::size_t n = st.nodes.size();
  if (as.size() != n) {
    throw ContractError("tickCan: " + std::to_string(as.size()) +
                        " input cells for " + std::to_string(n) + " nodes");
  }
  TickResult out{TickCells{t, {}, std::vector<NodeCells>(n)}, st};
  for (std::size_t i = 0; i < n; ++i) out.cells.nodes[i].as = as[i];
  stepControllers(st, out.cells, out.next, config);
  return out;
}

TickResult tickSystem(const SystemState& st,
                      std::span<const Cell<AMessage>> injections, Tick t,
                      const SystemConfig& config) {
  const std::size_t n = st.nodes.size();
  if (injections.size() != n) {
    throw ContractError("tickSystem: " + std::to_string(injections.size()) +
                        " injection cells for " + std::to_string(n) +
                        " nodes");
  }
  TickResult out{TickCells{t, {}, std::vector<NodeCells>(n)}, st};

  // Buffer output depends on state only, so it can be read before the
  // buffer consumes this tick's inputs.
  for (std::size_t i = 0; i < n; ++i) {
    out.cells.nodes[i].a = injections[i];
    if (t % 2 == 1) out.cells.nodes[i].as = st.nodes[i].buffer.b;
  }

  stepControllers(st, out.cells, out.next, config);

  for (std::size_t i = 0; i < n; ++i) {
    NodeCells& nc = out.cells.nodes[i];
    const BufferState& buffer = st.nodes[i].buffer;
    nc.primed = config.primeFrom && t >= *config.primeFrom && buffer.b.empty();
    Cell<Req> request = nc.lr;
    if (nc.primed && request.empty()) request = {kReq};
    auto step = guarded("buffer", i, t,
                        [&] { return bufferStep(buffer, nc.a, request, t); });
    out.next.nodes[i].buffer = std::move(step.next);
  }
  return out;
}

Trace runScenario(const Scenario& scenario) {
  if (auto violations = validateScenario(scenario); !violations.empty()) {
    throw ScenarioError(joinViolations(violations));
  }
  const std::size_t n = scenario.nodeCount;
  const SystemConfig config = systemConfig(scenario.options);

  std::map<Tick, std::vector<Cell<AMessage>>> byTick;
  for (const Injection& inj : scenario.injections) {
    auto& cells = byTick[inj.tick];
    cells.resize(n);
    cells[inj.node.index - 1] = {inj.message};
  }

  Trace trace = emptyTrace(scenario, TraceKind::kSystem);
  SystemState st = initialSystemState(n, scenario.options.reqDelay);
  const std::vector<Cell<AMessage>> quiet(n);
  for (Tick t = 0; t < scenario.horizon; ++t) {
    auto it = byTick.find(t);
    const auto& injections = it == byTick.end() ? quiet : it->second;
    try {
      TickResult step = tickSystem(st, injections, t, config);
      trace.snapshots.push_back(std::move(st));
      appendTick(trace, step.cells);
      st = std::move(step.next);
    } catch (const ComponentError& e) {
      trace.failure = e.failure();
      break;
    }
  }
  return trace;
}

Trace runCANOnly(std::span<const TimedStream<AMessage>> asStreams,
                 std::size_t horizon, const CanOnlyOptions& options) {
  const std::size_t n = asStreams.size();
  if (n == 0) throw ScenarioError("runCANOnly: at least one node is required");
  for (std::size_t i = 0; i < n; ++i) {
    if (asStreams[i].horizon() != horizon) {
      throw ScenarioError("runCANOnly: as_" + std::to_string(i + 1) +
                          " spans " + std::to_string(asStreams[i].horizon()) +
                          " ticks, expected " + std::to_string(horizon));
    }
  }
  if (options.enforceDiscipline) {
    std::vector<ScenarioViolation> vs;
    for (Tick t = 0; t < horizon; ++t) {
      std::set<Ident> ids;
      for (std::size_t i = 0; i < n; ++i) {
        const Cell<AMessage>& cell = asStreams[i].at(t);
        const NodeId node{i + 1};
        if (cell.size() > 1) {
          vs.push_back({"msg1", node, t, "more than one message in a tick"});
        }
        if (!cell.empty() && t % 2 == 0) {
          vs.push_back({"odd-tick", node, t, "message offered at an even tick"});
        }
        for (const AMessage& m : cell) {
          if (!ids.insert(m.id).second) {
            vs.push_back({"distinct-ids", node, t,
                          "identifier " + toString(m.id) +
                              " offered by more than one node"});
          }
        }
      }
    }
    if (!vs.empty()) throw ScenarioError(joinViolations(vs));
  }

  Scenario echo;
  echo.nodeCount = n;
  echo.horizon = horizon;
  echo.options.bootstrapRequestTick.reset();
  echo.options.reqDelay = options.reqDelay;
  echo.options.fidelityMode = options.table == LLTableMode::kLiteral;

  SystemConfig config;
  config.table = options.table;
  config.primeFrom.reset();

  Trace trace = emptyTrace(echo, TraceKind::kCanOnly);
  SystemState st = initialSystemState(n, options.reqDelay);
  std::vector<Cell<AMessage>> as(n);
  for (Tick t = 0; t < horizon; ++t) {
    for (std::size_t i = 0; i < n; ++i) as[i] = asStreams[i].at(t);
    try {
      TickResult step = tickCan(st, as, t, config);
      trace.snapshots.push_back(std::move(st));
      appendTick(trace, step.cells);
      st = std::move(step.next);
    } catch (const ComponentError& e) {
      trace.failure = e.failure();
      break;
    }
  }
  return trace;
}

std::vector<Trace> runBatch(std::span<const Scenario> scenarios,
                            unsigned threads) {
  std::vector<Trace> out(scenarios.size());
  detail::parallelFor(scenarios.size(), threads,
                      [&](std::size_t i) { out[i] = runScenario(scenarios[i]); });
  return out;
}

}  // namespace cansim
