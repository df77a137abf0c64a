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

// Stream operators over finite lists and horizon-bounded timed streams.

#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "cansim/types.hpp"

namespace cansim {

// Cell of `s` at tick t. Throws ContractError for t >= horizon.
template <class M>
const Cell<M>& ti(const TimedStream<M>& s, Tick t) {
  return s.at(t);
}

// First element. Throws ContractError on an empty list.
template <class M>
const M& ft(std::span<const M> l) {
  if (l.empty()) throw ContractError("ft of an empty list");
  return l.front();
}

template <class M>
const M& ft(const std::vector<M>& l) {
  return ft(std::span<const M>(l));
}

// Everything after the first element. Throws ContractError on an empty list.
template <class M>
std::vector<M> rt(std::span<const M> l) {
  if (l.empty()) throw ContractError("rt of an empty list");
  return std::vector<M>(l.begin() + 1, l.end());
}

template <class M>
std::vector<M> rt(const std::vector<M>& l) {
  return rt(std::span<const M>(l));
}

template <class M>
std::vector<M> concat(std::span<const M> x, std::span<const M> y) {
  std::vector<M> out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

// [1 .. #l]
template <class M>
std::vector<std::size_t> domOf(std::span<const M> l) {
  std::vector<std::size_t> out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out[i] = i + 1;
  return out;
}

template <class M>
std::vector<std::size_t> domOf(const std::vector<M>& l) {
  return domOf(std::span<const M>(l));
}

template <class M>
std::set<M> rngOf(std::span<const M> l) {
  return std::set<M>(l.begin(), l.end());
}

template <class M>
std::set<M> rngOf(const std::vector<M>& l) {
  return rngOf(std::span<const M>(l));
}

// True iff every cell of `s` holds at most n messages.
template <class M>
bool msgN(std::size_t n, const TimedStream<M>& s) {
  for (const Cell<M>& cell : s) {
    if (cell.size() > n) return false;
  }
  return true;
}

}  // namespace cansim
