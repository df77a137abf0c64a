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

// Auxiliary list functions used by the component contracts. Each follows its
// defining recursion; see functions.cpp.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cansim/types.hpp"

namespace cansim {

std::vector<Ident> takeIds(std::span<const AMessage> l);

// Concatenation of the first i lists, highest index first:
//   collectElements(0, s) = <>
//   collectElements(i+1, s) = s[i+1] ++ collectElements(i, s)
// Throws ContractError if i exceeds the number of lists.
template <class M>
std::vector<M> collectElements(std::size_t i, std::span<const Cell<M>> lists) {
  if (i > lists.size()) {
    throw ContractError("collectElements: index " + std::to_string(i) +
                        " exceeds arity " + std::to_string(lists.size()));
  }
  std::vector<M> out;
  for (std::size_t k = i; k > 0; --k) {
    const Cell<M>& s = lists[k - 1];
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

template <class M>
std::vector<M> collectElements(std::size_t i, const std::vector<Cell<M>>& lists) {
  return collectElements(i, std::span<const Cell<M>>(lists));
}

// Smallest of {a} and the members of l.
Ident minNatList(Ident a, std::span<const Ident> l);

// Smallest member of a nonempty list: minNatList(ft(l), rt(l)).
Ident minOfList(std::span<const Ident> l);

// Priority insertion: `a` goes before the first element with strictly
// greater id, so equal ids stay in arrival order.
std::vector<AMessage> prAdd(std::span<const AMessage> buf, const AMessage& a);

// Wire arbitration over the collected symbols of one tick. Returns <> for an
// empty list, <IdSym(min id)> when the head is an identifier, and <head> when
// the head is data. Throws AssumptionViolation if an identifier head is
// followed by a data symbol.
std::vector<Message> broadcast(std::span<const Message> l);

}  // namespace cansim
