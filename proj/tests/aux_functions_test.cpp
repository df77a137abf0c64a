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

#include <algorithm>

#include <gtest/gtest.h>

#include "cansim/functions.hpp"
#include "generators.hpp"

namespace cansim {
namespace {

AMessage msg(std::uint64_t id, const char* hex = "") {
  return AMessage{Ident{id}, Payload::fromHex(hex)};
}

TEST(TakeIdsTest, PreservesOrder) {
  std::vector<AMessage> l{msg(4), msg(1), msg(4)};
  EXPECT_EQ(takeIds(l), (std::vector<Ident>{Ident{4}, Ident{1}, Ident{4}}));
  EXPECT_TRUE(takeIds(std::vector<AMessage>{}).empty());
}

TEST(CollectElementsTest, HighestIndexFirst) {
  std::vector<Cell<int>> lists{{1}, {2, 3}, {}, {4}};
  EXPECT_EQ(collectElements(4, lists), (std::vector<int>{4, 2, 3, 1}));
  EXPECT_EQ(collectElements(2, lists), (std::vector<int>{2, 3, 1}));
  EXPECT_TRUE(collectElements(0, lists).empty());
}

TEST(CollectElementsTest, IndexBeyondArityThrows) {
  std::vector<Cell<int>> lists{{1}};
  EXPECT_THROW(collectElements(2, lists), ContractError);
}

TEST(MinTest, Basics) {
  std::vector<Ident> l{Ident{9}, Ident{3}, Ident{7}};
  EXPECT_EQ(minNatList(Ident{5}, l), Ident{3});
  EXPECT_EQ(minNatList(Ident{1}, l), Ident{1});
  EXPECT_EQ(minNatList(Ident{5}, std::vector<Ident>{}), Ident{5});
  EXPECT_EQ(minOfList(l), Ident{3});
  EXPECT_THROW(minOfList(std::vector<Ident>{}), ContractError);
}

TEST(MinTest, MatchesStdMinElement) {
  testing::Gen g(5);
  for (int i = 0; i < testing::kTrials; ++i) {
    auto l = g.idents(1, 12);
    EXPECT_EQ(minOfList(l), *std::min_element(l.begin(), l.end()));
  }
}

TEST(PrAddTest, InsertsBeforeFirstGreater) {
  std::vector<AMessage> buf{msg(1), msg(3, "aa"), msg(5)};
  auto out = prAdd(buf, msg(3, "bb"));
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[1], msg(3, "aa"));
  EXPECT_EQ(out[2], msg(3, "bb"));
  EXPECT_EQ(prAdd(std::vector<AMessage>{}, msg(2)), std::vector<AMessage>{msg(2)});
  EXPECT_EQ(prAdd(buf, msg(0)).front(), msg(0));
  EXPECT_EQ(prAdd(buf, msg(9)).back(), msg(9));
}

// Folding prAdd over any sequence yields a stable sort of it.
TEST(PrAddTest, FoldIsStableSortProperty) {
  testing::Gen g(6);
  for (int i = 0; i < testing::kTrials; ++i) {
    auto input = g.messages(12, 6);
    std::vector<AMessage> buf;
    for (const auto& m : input) {
      const auto next = prAdd(buf, m);
      ASSERT_EQ(next.size(), buf.size() + 1);
      buf = next;
    }
    auto expected = input;
    std::stable_sort(expected.begin(), expected.end(),
                     [](const AMessage& a, const AMessage& b) { return a.id < b.id; });
    EXPECT_EQ(buf, expected);
  }
}

TEST(BroadcastTest, Cases) {
  EXPECT_TRUE(broadcast(std::vector<Message>{}).empty());
  std::vector<Message> ids{idSym(Ident{6}), idSym(Ident{2}), idSym(Ident{4})};
  EXPECT_EQ(broadcast(ids), std::vector<Message>{idSym(Ident{2})});
  std::vector<Message> data{dataSym(Payload::fromHex("01"))};
  EXPECT_EQ(broadcast(data), data);
}

TEST(BroadcastTest, MixedSymbolsRejected) {
  std::vector<Message> mixed{idSym(Ident{1}), dataSym(Payload{})};
  EXPECT_THROW(broadcast(mixed), AssumptionViolation);
}

TEST(BroadcastTest, OutputHasAtMostOneSymbolProperty) {
  testing::Gen g(7);
  for (int i = 0; i < testing::kTrials; ++i) {
    std::vector<Message> l;
    const bool ids = g.coin();
    const std::size_t len = g.below(6);
    for (std::size_t k = 0; k < len; ++k) {
      l.push_back(ids ? idSym(Ident{g.below(100)}) : dataSym(g.payload()));
    }
    auto out = broadcast(l);
    EXPECT_LE(out.size(), 1u);
    EXPECT_EQ(out.empty(), l.empty());
    if (ids && !l.empty()) {
      std::vector<Ident> raw;
      for (const auto& m : l) raw.push_back(asIdent(m));
      EXPECT_EQ(asIdent(out.front()), minOfList(raw));
    }
  }
}

}  // namespace
}  // namespace cansim
