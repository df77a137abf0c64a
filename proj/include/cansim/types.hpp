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

// Message universe and timed-stream container shared by every module.
//
// A CAN frame is modelled as two abstract wire symbols: the identifier
// (arbitration phase) followed one tick later by the payload (data phase).
// Streams are horizon-bounded: cell t holds the finite list of messages
// observed during tick t.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cansim {

using Tick = std::size_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pure operation was called outside its precondition (head of an empty
// list, stream access past the horizon, arity mismatch).
class ContractError : public Error {
 public:
  using Error::Error;
};

// A component received input that breaks one of its stated assumptions.
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

class ScenarioError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Checker latency does not fit inside the trace horizon.
class HorizonError : public Error {
 public:
  using Error::Error;
};

// CAN identifier. Lower value means higher priority.
struct Ident {
  std::uint64_t value = 0;

  constexpr Ident() = default;
  constexpr explicit Ident(std::uint64_t v) : value(v) {}
  constexpr auto operator<=>(const Ident&) const = default;
};

inline constexpr std::size_t kDefaultMaxPayload = 8;

// Opaque data field. Only equality matters to the protocol model; the total
// order exists so payloads can live in ordered containers.
class Payload {
 public:
  Payload() = default;
  explicit Payload(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::size_t size() const { return bytes_.size(); }
  bool empty() const { return bytes_.empty(); }

  // Lowercase hex, two digits per octet.
  std::string hex() const;
  // Throws ParseError on odd length or non-hex characters.
  static Payload fromHex(std::string_view hex);

  auto operator<=>(const Payload&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

// Application-level message: msg(id, data).
struct AMessage {
  Ident id;
  Payload data;

  auto operator<=>(const AMessage&) const = default;
};

// Throws ContractError when the payload exceeds `maxPayload` octets.
AMessage mkAMessage(Ident id, Payload data,
                    std::size_t maxPayload = kDefaultMaxPayload);

// CAN-internal wire symbol: IdSym (arbitration phase) | DataSym (data phase).
using Message = std::variant<Ident, Payload>;

inline Message idSym(Ident id) { return Message{std::in_place_index<0>, id}; }
inline Message dataSym(Payload p) {
  return Message{std::in_place_index<1>, std::move(p)};
}
inline bool isIdSym(const Message& m) { return m.index() == 0; }
inline bool isDataSym(const Message& m) { return m.index() == 1; }
inline const Ident& asIdent(const Message& m) { return std::get<0>(m); }
inline const Payload& asPayload(const Message& m) { return std::get<1>(m); }

// Request token from CAN to a buffer. Every emitted request carries 0.
struct Req {
  std::uint64_t token = 0;

  auto operator<=>(const Req&) const = default;
};

inline constexpr Req kReq{};

template <class M>
using Cell = std::vector<M>;

template <class M>
class TimedStream {
 public:
  TimedStream() = default;
  explicit TimedStream(std::size_t horizon) : cells_(horizon) {}
  explicit TimedStream(std::vector<Cell<M>> cells) : cells_(std::move(cells)) {}

  std::size_t horizon() const { return cells_.size(); }

  const Cell<M>& at(Tick t) const {
    if (t >= cells_.size()) throw outOfHorizon(t);
    return cells_[t];
  }
  Cell<M>& at(Tick t) {
    if (t >= cells_.size()) throw outOfHorizon(t);
    return cells_[t];
  }

  void push_back(Cell<M> cell) { cells_.push_back(std::move(cell)); }

  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  bool operator==(const TimedStream&) const = default;

 private:
  ContractError outOfHorizon(Tick t) const {
    return ContractError("tick " + std::to_string(t) +
                         " is outside the stream horizon " +
                         std::to_string(cells_.size()));
  }

  std::vector<Cell<M>> cells_;
};

// 1-based node index.
struct NodeId {
  std::size_t index = 1;

  auto operator<=>(const NodeId&) const = default;
};

struct Injection {
  NodeId node;
  Tick tick = 0;
  AMessage message;

  bool operator==(const Injection&) const = default;
};

struct ScenarioOptions {
  // First tick from which idle buffers are primed with a request. Absent
  // means no priming at all (the buffers as literally specified).
  std::optional<Tick> bootstrapRequestTick = Tick{0};
  // Delay element on each CAN-boundary request channel.
  std::size_t reqDelay = 1;
  // Offset used when checking frame delivery against frame start.
  std::size_t mtLatency = 2;
  // Run LLTable row 2 as printed (the identifier is never put on the wire).
  bool fidelityMode = false;
  std::size_t maxPayload = kDefaultMaxPayload;

  bool operator==(const ScenarioOptions&) const = default;
};

struct Scenario {
  std::size_t nodeCount = 1;
  std::size_t horizon = 1;
  std::vector<Injection> injections;
  ScenarioOptions options;

  bool operator==(const Scenario&) const = default;
};

struct ScenarioViolation {
  std::string rule;
  std::optional<NodeId> node;
  std::optional<Tick> tick;
  std::string detail;
};

// Empty iff the scenario is runnable.
std::vector<ScenarioViolation> validateScenario(const Scenario& s);

std::string toString(const Ident& id);
std::string toString(const AMessage& m);   // msg(5,ab)
std::string toString(const Message& m);    // id:5 | data:ab
std::string toString(const Req& r);        // req

template <class M>
std::string toString(const Cell<M>& cell) {
  std::string out = "<";
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i) out += ",";
    out += toString(cell[i]);
  }
  return out + ">";
}

std::string toString(const ScenarioViolation& v);

}  // namespace cansim
