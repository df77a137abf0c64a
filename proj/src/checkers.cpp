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

#include "cansim/checkers.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "cansim/functions.hpp"
#include "cansim/stream.hpp"

namespace cansim {

namespace {

std::string nodeStream(std::string_view family, std::size_t i) {
  return std::string(family) + "_" + std::to_string(i + 1);
}

bool isId(const Cell<Message>& cell) {
  return !cell.empty() && isIdSym(cell.front());
}
bool isData(const Cell<Message>& cell) {
  return !cell.empty() && isDataSym(cell.front());
}

const TimedStream<Message>& messageStream(const Trace& trace,
                                          std::string_view name) {
  StreamRef ref = findStream(trace, name);
  if (ref.type != StreamType::kMessage) {
    throw ContractError("stream '" + std::string(name) +
                        "' does not carry wire symbols");
  }
  return *ref.messages;
}

constexpr std::array<Predicate, 6> kAllPredicates = {
    kPredMsg1, kPredMsgCANFormat, kPredWire,
    kPredTransmission, kPredRow3, kPredStructural};

}  // namespace

std::vector<Violation> checkMsg1(const Trace& trace, std::string_view stream) {
  StreamRef ref = findStream(trace, stream);
  std::vector<Violation> out;
  for (Tick t = 0; t < trace.horizon(); ++t) {
    const std::size_t size = ref.cellSize(t);
    if (size > 1) {
      out.push_back({"msg1", t, {std::string(stream)}, "at most 1 message",
                     std::to_string(size) + " messages"});
    }
  }
  return out;
}

std::vector<Violation> checkMsgCANFormat(const Trace& trace,
                                         std::string_view stream) {
  const TimedStream<Message>& s = messageStream(trace, stream);
  const std::size_t horizon = s.horizon();
  std::vector<Violation> out;
  for (Tick t = 0; t < horizon; ++t) {
    const Cell<Message>& cell = s.at(t);
    if (isId(cell) && t + 1 < horizon && !isData(s.at(t + 1))) {
      out.push_back({"msg-can-format", t, {std::string(stream)},
                     "identifier followed by data at tick " +
                         std::to_string(t + 1),
                     toString(cell) + " then " + toString(s.at(t + 1))});
    }
    if (isData(cell) && (t == 0 || !isId(s.at(t - 1)))) {
      out.push_back({"msg-can-format", t, {std::string(stream)},
                     "data preceded by an identifier",
                     t == 0 ? toString(cell) + " at tick 0"
                            : toString(s.at(t - 1)) + " then " +
                                  toString(cell)});
    }
  }
  return out;
}

std::vector<Violation> checkWireAssumptions(const Trace& trace) {
  std::vector<Violation> out;
  const std::size_t n = trace.nodeCount();
  for (Tick t = 0; t < trace.horizon(); ++t) {
    std::vector<std::string> idNodes;
    std::vector<std::string> dataNodes;
    for (std::size_t i = 0; i < n; ++i) {
      const Cell<Message>& cell = trace.ws[i].at(t);
      if (isId(cell)) idNodes.push_back(nodeStream("ws", i));
      if (isData(cell)) dataNodes.push_back(nodeStream("ws", i));
    }
    if (!idNodes.empty() && !dataNodes.empty()) {
      std::vector<std::string> streams = idNodes;
      streams.insert(streams.end(), dataNodes.begin(), dataNodes.end());
      out.push_back({"wire", t, std::move(streams),
                     "identifiers and data never share a tick",
                     std::to_string(idNodes.size()) + " identifier(s), " +
                         std::to_string(dataNodes.size()) + " data"});
    }
  }
  return out;
}

TransmissionCheck checkMessageTransmission(const Trace& trace,
                                           std::size_t latency) {
  const std::size_t horizon = trace.horizon();
  if (latency >= horizon) {
    throw HorizonError("latency " + std::to_string(latency) +
                       " does not fit in a horizon of " +
                       std::to_string(horizon) + " ticks");
  }
  const std::size_t n = trace.nodeCount();
  TransmissionCheck out;

  // Axiom 2: literal cell equality across nodes, every tick.
  for (Tick t = 0; t < horizon; ++t) {
    for (std::size_t j = 1; j < n; ++j) {
      if (trace.ar[j].at(t) != trace.ar[0].at(t)) {
        out.violations.push_back(
            {"transmission/axiom2", t, {"ar_1", nodeStream("ar", j)},
             toString(trace.ar[0].at(t)), toString(trace.ar[j].at(t))});
      }
    }
  }

  for (Tick t = 0; t + latency < horizon; ++t) {
    const Tick later = t + latency;
    std::vector<Cell<AMessage>> offers(n);
    for (std::size_t i = 0; i < n; ++i) offers[i] = trace.as[i].at(t);

    // Axiom 1: silence propagates.
    const bool silent = std::all_of(offers.begin(), offers.end(),
                                    [](const auto& c) { return c.empty(); });
    if (silent) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!trace.ar[j].at(later).empty()) {
          out.violations.push_back(
              {"transmission/axiom1", later, {nodeStream("ar", j)},
               "<> (no offers at tick " + std::to_string(t) + ")",
               toString(trace.ar[j].at(later))});
        }
      }
      continue;
    }

    // Axiom 3: the minimal identifier wins.
    const std::vector<AMessage> collected = collectElements(n, offers);
    const Ident winning = minOfList(takeIds(collected));
    std::vector<std::size_t> winners;
    for (std::size_t i = 0; i < n; ++i) {
      if (!offers[i].empty() && ft(offers[i]).id == winning) winners.push_back(i);
    }
    if (winners.size() > 1) {
      std::string who;
      for (std::size_t i : winners) who += " " + nodeStream("as", i);
      out.warnings.push_back({"transmission", t,
                              "identifier " + toString(winning) +
                                  " offered by several nodes (" + who.substr(1) +
                                  "); winner clause skipped"});
      continue;
    }
    const std::size_t i = winners.front();
    if (trace.r[i].at(later).empty()) {
      out.violations.push_back({"transmission/axiom3", later,
                                {nodeStream("r", i)},
                                "request for frame started at tick " +
                                    std::to_string(t),
                                "<>"});
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (trace.ar[j].at(later) != offers[i]) {
        std::vector<std::string> streams = {nodeStream("as", i),
                                            nodeStream("ar", j)};
        out.violations.push_back({"transmission/axiom3", later,
                                  std::move(streams), toString(offers[i]),
                                  toString(trace.ar[j].at(later))});
      }
    }
  }
  return out;
}

std::vector<Violation> checkRow3Unreachable(const Trace& trace) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < trace.nodeCount(); ++i) {
    for (Tick t = 0; t < trace.rows[i].size(); ++t) {
      if (trace.rows[i][t] == LLRow::kNoVerdict) {
        out.push_back({"row3", t, {nodeStream("ms", i), "wr"},
                       "row 3 never fires",
                       "data on " + nodeStream("ms", i) +
                           " with a silent wire"});
      }
    }
  }
  return out;
}

std::vector<Violation> checkStructural(const Trace& trace) {
  std::vector<Violation> out;
  const std::size_t n = trace.nodeCount();
  for (Tick t = 0; t < trace.snapshots.size(); ++t) {
    const SystemState& st = trace.snapshots[t];
    for (std::size_t i = 0; i < st.nodes.size(); ++i) {
      const NodeState& node = st.nodes[i];
      const std::string who = "node " + std::to_string(i + 1);
      const auto& buf = node.buffer.buf;
      if (!std::is_sorted(buf.begin(), buf.end(),
                          [](const AMessage& x, const AMessage& y) {
                            return x.id < y.id;
                          })) {
        out.push_back({"structural/buf-sorted", t, {who + " buf"},
                       "nondecreasing identifiers", toString(buf)});
      }
      if (node.buffer.b.size() > 1) {
        out.push_back({"structural/slot", t, {who + " b"}, "|b| <= 1",
                       toString(node.buffer.b)});
      }
      if (node.encoder.e != node.encoder.pending.has_value()) {
        out.push_back({"structural/encoder", t, {who + " encoder"},
                       "pending present iff e",
                       std::string("e=") + (node.encoder.e ? "true" : "false")});
      }
      if (node.decoder.d != node.decoder.lastId.has_value()) {
        out.push_back({"structural/decoder", t, {who + " decoder"},
                       "lastId present iff d",
                       std::string("d=") + (node.decoder.d ? "true" : "false")});
      }
    }
  }
  for (Tick t = 0; t < trace.horizon(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && trace.ar[i].at(t) != trace.ar[0].at(t)) {
        out.push_back({"structural/ar-equal", t, {"ar_1", nodeStream("ar", i)},
                       toString(trace.ar[0].at(t)),
                       toString(trace.ar[i].at(t))});
      }
      if (trace.mr[i].at(t) != trace.wr.at(t)) {
        out.push_back({"structural/mr-wr", t, {nodeStream("mr", i), "wr"},
                       toString(trace.wr.at(t)), toString(trace.mr[i].at(t))});
      }
    }
  }
  return out;
}

std::string_view predicateName(Predicate p) {
  switch (p) {
    case kPredMsg1: return "msg1";
    case kPredMsgCANFormat: return "msg-can-format";
    case kPredWire: return "wire";
    case kPredTransmission: return "transmission";
    case kPredRow3: return "row3";
    case kPredStructural: return "structural";
    default: return "all";
  }
}

std::optional<Predicate> predicateFromName(std::string_view name) {
  for (Predicate p : kAllPredicates) {
    if (predicateName(p) == name) return p;
  }
  if (name == "all") return kPredAll;
  return std::nullopt;
}

std::size_t Report::violationCount() const {
  std::size_t count = 0;
  for (const PredicateResult& r : results) count += r.violations.size();
  return count;
}

bool Report::passed(bool strict) const {
  return violationCount() == 0 && (!strict || warnings.empty());
}

Report checkAll(const Trace& trace, const CheckConfig& config) {
  Report report;
  const std::size_t n = trace.nodeCount();
  const std::size_t horizon = trace.horizon();

  if (trace.failure) {
    const ComponentFailure& f = *trace.failure;
    PredicateResult run{"run", CheckStatus::kFail, 1, {}, {}};
    run.violations.push_back(
        {"run", f.tick,
         {f.node ? f.component + " of node " + std::to_string(f.node->index)
                 : f.component},
         "component accepts its input", f.message});
    report.results.push_back(std::move(run));
  }

  auto finish = [&](PredicateResult r) {
    if (r.status != CheckStatus::kSkipped) {
      r.status = r.violations.empty() ? CheckStatus::kPass : CheckStatus::kFail;
    }
    report.results.push_back(std::move(r));
  };
  auto append = [](std::vector<Violation>& into, std::vector<Violation> more) {
    into.insert(into.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  };

  if (config.predicates & kPredMsg1) {
    PredicateResult r;
    r.name = "msg1";
    for (std::string_view family : {"as", "ar", "ms", "mr", "ws", "r"}) {
      for (std::size_t i = 0; i < n; ++i) {
        append(r.violations, checkMsg1(trace, nodeStream(family, i)));
        ++r.evaluations;
      }
    }
    append(r.violations, checkMsg1(trace, "wr"));
    ++r.evaluations;
    finish(std::move(r));
  }

  if (config.predicates & kPredMsgCANFormat) {
    PredicateResult r;
    r.name = "msg-can-format";
    for (std::string_view family : {"ms", "mr"}) {
      for (std::size_t i = 0; i < n; ++i) {
        append(r.violations, checkMsgCANFormat(trace, nodeStream(family, i)));
        ++r.evaluations;
      }
    }
    append(r.violations, checkMsgCANFormat(trace, "wr"));
    ++r.evaluations;
    finish(std::move(r));
  }

  if (config.predicates & kPredWire) {
    PredicateResult r;
    r.name = "wire";
    r.violations = checkWireAssumptions(trace);
    r.evaluations = horizon;
    finish(std::move(r));
  }

  if (config.predicates & kPredTransmission) {
    PredicateResult r;
    r.name = "transmission";
    const std::size_t latency =
        config.latency.value_or(trace.scenario.options.mtLatency);
    if (latency >= horizon) {
      r.status = CheckStatus::kSkipped;
      r.note = "latency " + std::to_string(latency) + " >= horizon " +
               std::to_string(horizon);
    } else {
      TransmissionCheck tc = checkMessageTransmission(trace, latency);
      r.violations = std::move(tc.violations);
      r.evaluations = horizon - latency;
      report.warnings.insert(report.warnings.end(), tc.warnings.begin(),
                             tc.warnings.end());
    }
    finish(std::move(r));
  }

  if (config.predicates & kPredRow3) {
    PredicateResult r;
    r.name = "row3";
    r.violations = checkRow3Unreachable(trace);
    r.evaluations = horizon * n;
    finish(std::move(r));
  }

  if (config.predicates & kPredStructural) {
    PredicateResult r;
    r.name = "structural";
    r.violations = checkStructural(trace);
    r.evaluations = horizon;
    finish(std::move(r));
  }

  // Liveness is not a contract of any component, so a silent bus is only
  // reported as a diagnosis.
  bool offered = false;
  bool delivered = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (Tick t = 0; t < horizon; ++t) {
      offered |= !trace.a[i].at(t).empty() || !trace.as[i].at(t).empty();
      delivered |= !trace.ar[i].at(t).empty();
    }
  }
  if (offered && !delivered) {
    report.warnings.push_back(
        {"stall", std::nullopt,
         "messages entered the system but none was delivered"});
  }
  return report;
}

std::string renderText(const Report& report) {
  std::string out;
  for (const PredicateResult& r : report.results) {
    const char* status = r.status == CheckStatus::kPass   ? "PASS"
                         : r.status == CheckStatus::kFail ? "FAIL"
                                                          : "SKIP";
    out += std::string(status) + " " + r.name;
    if (r.status == CheckStatus::kFail) {
      out += ": " + std::to_string(r.violations.size()) + " violation(s)";
    }
    if (!r.note.empty()) out += " (" + r.note + ")";
    out += "\n";
    for (const Violation& v : r.violations) {
      std::string streams;
      for (const std::string& s : v.streams) {
        streams += (streams.empty() ? "" : ",") + s;
      }
      out += "  t=" + std::to_string(v.tick) + " " + v.predicate + " [" +
             streams + "] expected " + v.expected + ", observed " +
             v.observed + "\n";
    }
  }
  for (const Warning& w : report.warnings) {
    out += "WARN " + w.predicate;
    if (w.tick) out += " t=" + std::to_string(*w.tick);
    out += ": " + w.detail + "\n";
  }
  out += std::to_string(report.violationCount()) + " violation(s), " +
         std::to_string(report.warnings.size()) + " warning(s)\n";
  return out;
}

}  // namespace cansim
