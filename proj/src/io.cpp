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

#include "cansim/io.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace cansim {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kTraceVersion = 1;

// --- symbols ----------------------------------------------------------------

std::uint64_t parseUnsigned(std::string_view text, std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad number in '" + std::string(token) + "'");
  }
  return value;
}

Req parseReq(std::string_view token) {
  if (token != "req") throw ParseError("bad request '" + std::string(token) + "'");
  return kReq;
}

template <class M>
Json cellJson(const Cell<M>& cell) {
  Json out = Json::array();
  for (const M& m : cell) out.push_back(toString(m));
  return out;
}

// --- field access with diagnostics ------------------------------------------

class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError((path_.empty() ? std::string("document") : path_) + ": " +
                     what);
  }

  void requireObject(std::initializer_list<std::string_view> allowed) const {
    if (!j_.is_object()) fail("expected an object");
    for (const auto& item : j_.items()) {
      bool known = false;
      for (std::string_view a : allowed) known |= item.key() == a;
      if (!known) child(item.key()).fail("unknown field");
    }
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  Reader child(const std::string& key) const {
    if (!j_.contains(key)) Reader(j_, join(key)).fail("missing field");
    return Reader(j_.at(key), join(key));
  }

  Reader element(std::size_t i) const {
    return Reader(j_.at(i), path_ + "[" + std::to_string(i) + "]");
  }

  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  std::uint64_t u64() const {
    if (!j_.is_number_unsigned()) fail("expected a non-negative integer");
    return j_.get<std::uint64_t>();
  }

  bool boolean() const {
    if (!j_.is_boolean()) fail("expected true or false");
    return j_.get<bool>();
  }

  bool isNull() const { return j_.is_null(); }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  template <class M, class ParseFn>
  Cell<M> cell(ParseFn parse) const {
    Cell<M> out;
    for (std::size_t i = 0, n = size(); i < n; ++i) {
      Reader e = element(i);
      try {
        out.push_back(parse(e.str()));
      } catch (const ParseError& err) {
        e.fail(err.what());
      }
    }
    return out;
  }

 private:
  std::string join(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const Json& j_;
  std::string path_;
};

Json parseJson(std::string_view text, const std::string& where) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(where + e.what());
  }
}

// --- scenario -----------------------------------------------------------------

Json scenarioJson(const Scenario& s) {
  Json injections = Json::array();
  for (const Injection& inj : s.injections) {
    injections.push_back({{"node", inj.node.index},
                          {"tick", inj.tick},
                          {"id", inj.message.id.value},
                          {"data", inj.message.data.hex()}});
  }
  const ScenarioOptions& o = s.options;
  Json options = {
      {"bootstrapRequestTick",
       o.bootstrapRequestTick ? Json(*o.bootstrapRequestTick) : Json(nullptr)},
      {"reqDelay", o.reqDelay},
      {"mtLatency", o.mtLatency},
      {"fidelityMode", o.fidelityMode},
      {"maxPayload", o.maxPayload}};
  return {{"nodeCount", s.nodeCount},
          {"horizon", s.horizon},
          {"injections", std::move(injections)},
          {"options", std::move(options)}};
}

Scenario scenarioFrom(const Reader& r) {
  r.requireObject({"nodeCount", "horizon", "injections", "options"});
  Scenario s;
  s.nodeCount = r.child("nodeCount").u64();
  s.horizon = r.child("horizon").u64();
  if (r.has("options")) {
    Reader o = r.child("options");
    o.requireObject({"bootstrapRequestTick", "reqDelay", "mtLatency",
                     "fidelityMode", "maxPayload"});
    if (o.has("bootstrapRequestTick")) {
      Reader b = o.child("bootstrapRequestTick");
      if (b.isNull()) {
        s.options.bootstrapRequestTick.reset();
      } else {
        s.options.bootstrapRequestTick = b.u64();
      }
    }
    if (o.has("reqDelay")) s.options.reqDelay = o.child("reqDelay").u64();
    if (o.has("mtLatency")) s.options.mtLatency = o.child("mtLatency").u64();
    if (o.has("fidelityMode")) {
      s.options.fidelityMode = o.child("fidelityMode").boolean();
    }
    if (o.has("maxPayload")) s.options.maxPayload = o.child("maxPayload").u64();
  }
  if (r.has("injections")) {
    Reader list = r.child("injections");
    for (std::size_t i = 0, n = list.size(); i < n; ++i) {
      Reader e = list.element(i);
      e.requireObject({"node", "tick", "id", "data"});
      Injection inj;
      inj.node = NodeId{e.child("node").u64()};
      inj.tick = e.child("tick").u64();
      inj.message.id = Ident{e.child("id").u64()};
      if (e.has("data")) {
        Reader d = e.child("data");
        try {
          inj.message.data = Payload::fromHex(d.str());
        } catch (const ParseError& err) {
          d.fail(err.what());
        }
      }
      s.injections.push_back(std::move(inj));
    }
  }
  return s;
}

// --- trace --------------------------------------------------------------------

Json stateJson(const NodeState& node) {
  Json line = Json::array();
  for (const Cell<Req>& cell : node.requestLine) line.push_back(cellJson(cell));
  return {{"buf", cellJson(node.buffer.buf)},
          {"b", cellJson(node.buffer.b)},
          {"e", node.encoder.e},
          {"pending", node.encoder.pending ? Json(node.encoder.pending->hex())
                                           : Json(nullptr)},
          {"d", node.decoder.d},
          {"lastId", node.decoder.lastId ? Json(node.decoder.lastId->value)
                                         : Json(nullptr)},
          {"lid", node.logical.lid.value},
          {"requestLine", std::move(line)}};
}

NodeState stateFrom(const Reader& r) {
  r.requireObject({"buf", "b", "e", "pending", "d", "lastId", "lid",
                   "requestLine"});
  NodeState node;
  node.buffer.buf = r.child("buf").cell<AMessage>(parseAMessage);
  node.buffer.b = r.child("b").cell<AMessage>(parseAMessage);
  node.encoder.e = r.child("e").boolean();
  if (Reader p = r.child("pending"); !p.isNull()) {
    try {
      node.encoder.pending = Payload::fromHex(p.str());
    } catch (const ParseError& err) {
      p.fail(err.what());
    }
  }
  node.decoder.d = r.child("d").boolean();
  if (Reader l = r.child("lastId"); !l.isNull()) {
    node.decoder.lastId = Ident{l.u64()};
  }
  node.logical.lid = Ident{r.child("lid").u64()};
  Reader line = r.child("requestLine");
  for (std::size_t i = 0, n = line.size(); i < n; ++i) {
    node.requestLine.push_back(line.element(i).cell<Req>(parseReq));
  }
  return node;
}

const char* kindName(TraceKind kind) {
  return kind == TraceKind::kSystem ? "system" : "can-only";
}

}  // namespace

AMessage parseAMessage(std::string_view token) {
  constexpr std::string_view kPrefix = "msg(";
  if (token.size() <= kPrefix.size() ||
      token.substr(0, kPrefix.size()) != kPrefix || token.back() != ')') {
    throw ParseError("bad message '" + std::string(token) + "'");
  }
  const std::string_view body =
      token.substr(kPrefix.size(), token.size() - kPrefix.size() - 1);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("bad message '" + std::string(token) + "'");
  }
  return AMessage{Ident{parseUnsigned(body.substr(0, comma), token)},
                  Payload::fromHex(body.substr(comma + 1))};
}

Message parseMessage(std::string_view token) {
  if (token.substr(0, 3) == "id:") {
    return idSym(Ident{parseUnsigned(token.substr(3), token)});
  }
  if (token.substr(0, 5) == "data:") return dataSym(Payload::fromHex(token.substr(5)));
  throw ParseError("bad wire symbol '" + std::string(token) + "'");
}

std::string scenarioToJson(const Scenario& scenario) {
  return scenarioJson(scenario).dump(2) + "\n";
}

Scenario parseScenario(std::string_view text) {
  const Json j = parseJson(text, "scenario: ");
  return scenarioFrom(Reader(j, ""));
}

std::string traceToJsonl(const Trace& trace) {
  std::string out;
  Json header = {{"format", "cansim-trace"},
                 {"version", kTraceVersion},
                 {"kind", kindName(trace.kind)},
                 {"scenario", scenarioJson(trace.scenario)}};
  out += header.dump() + "\n";

  for (Tick t = 0; t < trace.horizon(); ++t) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < trace.nodeCount(); ++i) {
      Json node = {{"a", cellJson(trace.a[i].at(t))},
                   {"as", cellJson(trace.as[i].at(t))},
                   {"ms", cellJson(trace.ms[i].at(t))},
                   {"ws", cellJson(trace.ws[i].at(t))},
                   {"lr", cellJson(trace.lr[i].at(t))},
                   {"r", cellJson(trace.r[i].at(t))},
                   {"mr", cellJson(trace.mr[i].at(t))},
                   {"ar", cellJson(trace.ar[i].at(t))},
                   {"row", static_cast<int>(trace.rows[i][t])},
                   {"primed", static_cast<bool>(trace.primed[i][t])},
                   {"state", stateJson(trace.snapshots[t].nodes[i])}};
      nodes.push_back(std::move(node));
    }
    Json line = {{"t", t},
                 {"wr", cellJson(trace.wr.at(t))},
                 {"latch", cellJson(trace.snapshots[t].wire.latch)},
                 {"nodes", std::move(nodes)}};
    out += line.dump() + "\n";
  }

  Json failure = nullptr;
  if (trace.failure) {
    const ComponentFailure& f = *trace.failure;
    failure = {{"tick", f.tick},
               {"node", f.node ? Json(f.node->index) : Json(nullptr)},
               {"component", f.component},
               {"message", f.message}};
  }
  Json end = {{"end", {{"ticks", trace.horizon()}, {"failure", failure}}}};
  out += end.dump() + "\n";
  return out;
}

Trace parseTrace(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    if (nl > pos) lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.size() < 2) throw ParseError("trace: missing header or end line");

  auto lineJson = [&](std::size_t k) {
    return parseJson(lines[k], "trace line " + std::to_string(k + 1) + ": ");
  };
  auto where = [](std::size_t k) { return "line " + std::to_string(k + 1); };

  const Json header = lineJson(0);
  Reader h(header, where(0));
  h.requireObject({"format", "version", "kind", "scenario"});
  if (h.child("format").str() != "cansim-trace") h.fail("not a cansim trace");
  if (h.child("version").u64() != kTraceVersion) h.fail("unsupported version");
  const std::string kind = h.child("kind").str();
  if (kind != "system" && kind != "can-only") h.child("kind").fail("unknown kind");

  const Scenario scenario = scenarioFrom(h.child("scenario"));
  Trace trace = emptyTrace(
      scenario, kind == "system" ? TraceKind::kSystem : TraceKind::kCanOnly);
  const std::size_t n = scenario.nodeCount;

  for (std::size_t k = 1; k + 1 < lines.size(); ++k) {
    const Json j = lineJson(k);
    Reader line(j, where(k));
    line.requireObject({"t", "wr", "latch", "nodes"});
    const Tick t = k - 1;
    if (line.child("t").u64() != t) line.child("t").fail("ticks out of order");
    trace.wr.push_back(line.child("wr").cell<Message>(parseMessage));

    SystemState st;
    st.wire.latch = line.child("latch").cell<Message>(parseMessage);
    Reader nodes = line.child("nodes");
    if (nodes.size() != n) nodes.fail("expected " + std::to_string(n) + " nodes");
    for (std::size_t i = 0; i < n; ++i) {
      Reader node = nodes.element(i);
      node.requireObject({"a", "as", "ms", "ws", "lr", "r", "mr", "ar", "row",
                          "primed", "state"});
      trace.a[i].push_back(node.child("a").cell<AMessage>(parseAMessage));
      trace.as[i].push_back(node.child("as").cell<AMessage>(parseAMessage));
      trace.ms[i].push_back(node.child("ms").cell<Message>(parseMessage));
      trace.ws[i].push_back(node.child("ws").cell<Message>(parseMessage));
      trace.lr[i].push_back(node.child("lr").cell<Req>(parseReq));
      trace.r[i].push_back(node.child("r").cell<Req>(parseReq));
      trace.mr[i].push_back(node.child("mr").cell<Message>(parseMessage));
      trace.ar[i].push_back(node.child("ar").cell<AMessage>(parseAMessage));
      const std::uint64_t row = node.child("row").u64();
      if (row < 1 || row > 5) node.child("row").fail("row must be 1..5");
      trace.rows[i].push_back(static_cast<LLRow>(row));
      trace.primed[i].push_back(node.child("primed").boolean());
      st.nodes.push_back(stateFrom(node.child("state")));
    }
    trace.snapshots.push_back(std::move(st));
  }

  const std::size_t last = lines.size() - 1;
  const Json endJson = lineJson(last);
  Reader endLine(endJson, where(last));
  endLine.requireObject({"end"});
  Reader end = endLine.child("end");
  end.requireObject({"ticks", "failure"});
  if (end.child("ticks").u64() != trace.horizon()) {
    end.child("ticks").fail("tick count does not match the tick lines");
  }
  if (Reader f = end.child("failure"); !f.isNull()) {
    f.requireObject({"tick", "node", "component", "message"});
    ComponentFailure failure;
    failure.tick = f.child("tick").u64();
    if (Reader node = f.child("node"); !node.isNull()) {
      failure.node = NodeId{node.u64()};
    }
    failure.component = f.child("component").str();
    failure.message = f.child("message").str();
    trace.failure = std::move(failure);
  }
  return trace;
}

std::string reportToJson(const Report& report) {
  Json results = Json::array();
  for (const PredicateResult& r : report.results) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) {
      violations.push_back({{"predicate", v.predicate},
                            {"tick", v.tick},
                            {"streams", v.streams},
                            {"expected", v.expected},
                            {"observed", v.observed}});
    }
    const char* status = r.status == CheckStatus::kPass   ? "pass"
                         : r.status == CheckStatus::kFail ? "fail"
                                                          : "skipped";
    results.push_back({{"name", r.name},
                       {"status", status},
                       {"evaluations", r.evaluations},
                       {"note", r.note},
                       {"violations", std::move(violations)}});
  }
  Json warnings = Json::array();
  for (const Warning& w : report.warnings) {
    warnings.push_back({{"predicate", w.predicate},
                        {"tick", w.tick ? Json(*w.tick) : Json(nullptr)},
                        {"detail", w.detail}});
  }
  Json doc = {{"passed", report.passed()},
              {"violations", report.violationCount()},
              {"results", std::move(results)},
              {"warnings", std::move(warnings)}};
  return doc.dump(2) + "\n";
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void writeFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing '" + path + "'");
}

Scenario loadScenario(const std::string& path) {
  try {
    return parseScenario(readFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void saveScenario(const std::string& path, const Scenario& scenario) {
  writeFile(path, scenarioToJson(scenario));
}

Trace loadTrace(const std::string& path) {
  try {
    return parseTrace(readFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void saveTrace(const std::string& path, const Trace& trace) {
  writeFile(path, traceToJsonl(trace));
}

}  // namespace cansim
