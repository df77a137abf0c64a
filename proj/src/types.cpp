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

#include "cansim/types.hpp"

#include <set>
#include <utility>

namespace cansim {

namespace {

int hexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string Payload::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Payload Payload::fromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw ParseError("hex payload has odd length: '" + std::string(hex) + "'");
  }
  std::vector<std::uint8_t> bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hexDigit(hex[i]);
    int lo = hexDigit(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw ParseError("invalid hex payload: '" + std::string(hex) + "'");
    }
    bytes.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return Payload(std::move(bytes));
}

AMessage mkAMessage(Ident id, Payload data, std::size_t maxPayload) {
  if (data.size() > maxPayload) {
    throw ContractError("payload of " + std::to_string(data.size()) +
                        " octets exceeds the maximum of " +
                        std::to_string(maxPayload));
  }
  return AMessage{id, std::move(data)};
}

std::vector<ScenarioViolation> validateScenario(const Scenario& s) {
  std::vector<ScenarioViolation> out;
  if (s.nodeCount < 1) {
    out.push_back({"node-count", std::nullopt, std::nullopt,
                   "nodeCount must be at least 1"});
  }
  std::set<std::pair<std::size_t, Tick>> seen;
  for (const Injection& inj : s.injections) {
    if (inj.node.index < 1 || inj.node.index > s.nodeCount) {
      out.push_back({"node-range", inj.node, inj.tick,
                     "node " + std::to_string(inj.node.index) +
                         " is outside [1.." + std::to_string(s.nodeCount) +
                         "]"});
    }
    if (inj.tick >= s.horizon) {
      out.push_back({"out-of-horizon", inj.node, inj.tick,
                     "injection tick " + std::to_string(inj.tick) +
                         " is not below horizon " +
                         std::to_string(s.horizon)});
    }
    if (!seen.insert({inj.node.index, inj.tick}).second) {
      out.push_back({"duplicate-injection", inj.node, inj.tick,
                     "more than one message injected at the same tick"});
    }
    if (inj.message.data.size() > s.options.maxPayload) {
      out.push_back({"payload-size", inj.node, inj.tick,
                     "payload of " + std::to_string(inj.message.data.size()) +
                         " octets exceeds " +
                         std::to_string(s.options.maxPayload)});
    }
  }
  return out;
}

std::string toString(const Ident& id) { return std::to_string(id.value); }

std::string toString(const AMessage& m) {
  return "msg(" + toString(m.id) + "," + m.data.hex() + ")";
}

std::string toString(const Message& m) {
  if (isIdSym(m)) return "id:" + toString(asIdent(m));
  return "data:" + asPayload(m).hex();
}

std::string toString(const Req&) { return "req"; }

std::string toString(const ScenarioViolation& v) {
  std::string out = v.rule;
  if (v.node) out += " node=" + std::to_string(v.node->index);
  if (v.tick) out += " tick=" + std::to_string(*v.tick);
  return out + ": " + v.detail;
}

}  // namespace cansim
