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

#include "cansim/functions.hpp"

namespace cansim {

std::vector<Ident> takeIds(std::span<const AMessage> l) {
  std::vector<Ident> out;
  out.reserve(l.size());
  for (const AMessage& m : l) out.push_back(m.id);
  return out;
}

Ident minNatList(Ident a, std::span<const Ident> l) {
  // MinNatList(a, <x> ++ y) = if a <= x then MinNatList(a, y) else MinNatList(x, y)
  Ident acc = a;
  for (const Ident& x : l) {
    if (!(acc <= x)) acc = x;
  }
  return acc;
}

Ident minOfList(std::span<const Ident> l) {
  if (l.empty()) throw ContractError("minOfList of an empty list");
  return minNatList(l.front(), l.subspan(1));
}

std::vector<AMessage> prAdd(std::span<const AMessage> buf, const AMessage& a) {
  std::vector<AMessage> out;
  out.reserve(buf.size() + 1);
  std::size_t k = 0;
  for (; k < buf.size(); ++k) {
    if (a.id < buf[k].id) break;
    out.push_back(buf[k]);
  }
  out.push_back(a);
  out.insert(out.end(), buf.begin() + static_cast<std::ptrdiff_t>(k), buf.end());
  return out;
}

std::vector<Message> broadcast(std::span<const Message> l) {
  if (l.empty()) return {};
  const Message& head = l.front();
  if (isDataSym(head)) return {head};

  std::vector<Ident> tail;
  tail.reserve(l.size() - 1);
  for (std::size_t k = 1; k < l.size(); ++k) {
    if (!isIdSym(l[k])) {
      throw AssumptionViolation(
          "broadcast: identifier and data symbols mixed in one tick (" +
          toString(head) + " with " + toString(l[k]) + ")");
    }
    tail.push_back(asIdent(l[k]));
  }
  return {idSym(minNatList(asIdent(head), tail))};
}

}  // namespace cansim
