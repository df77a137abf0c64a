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

#include <gtest/gtest.h>

#include "cansim/system.hpp"
#include "generators.hpp"

namespace cansim {
namespace {

AMessage msg(std::uint64_t id, const char* hex = "") {
  return AMessage{Ident{id}, Payload::fromHex(hex)};
}

Scenario singleFrame() {
  Scenario s;
  s.nodeCount = 1;
  s.horizon = 6;
  s.injections = {{NodeId{1}, 0, msg(5, "ab")}};
  return s;
}

TEST(RunScenarioTest, SingleFrameTimeline) {
  const Trace tr = runScenario(singleFrame());
  ASSERT_FALSE(tr.failure);
  ASSERT_EQ(tr.horizon(), 6u);
  EXPECT_EQ(tr.as[0].at(1), Cell<AMessage>{msg(5, "ab")});
  EXPECT_EQ(tr.ms[0].at(1), Cell<Message>{idSym(Ident{5})});
  EXPECT_EQ(tr.ms[0].at(2), Cell<Message>{dataSym(Payload::fromHex("ab"))});
  EXPECT_EQ(tr.wr.at(2), Cell<Message>{idSym(Ident{5})});
  EXPECT_EQ(tr.wr.at(3), Cell<Message>{dataSym(Payload::fromHex("ab"))});
  EXPECT_EQ(tr.rows[0][1], LLRow::kArbitrate);
  EXPECT_EQ(tr.rows[0][2], LLRow::kWon);
  EXPECT_EQ(tr.lr[0].at(2), Cell<Req>{kReq});
  EXPECT_EQ(tr.r[0].at(3), Cell<Req>{kReq});
  EXPECT_EQ(tr.ar[0].at(3), Cell<AMessage>{msg(5, "ab")});
  EXPECT_EQ(deliveries(tr), (std::vector<Delivery>{{3, msg(5, "ab")}}));
  for (Tick t = 4; t < 6; ++t) {
    EXPECT_TRUE(tr.wr.at(t).empty());
    EXPECT_TRUE(tr.ar[0].at(t).empty());
  }
}

TEST(RunScenarioTest, LowerIdentifierWinsAndLoserRetries) {
  Scenario s;
  s.nodeCount = 2;
  s.horizon = 8;
  s.injections = {{NodeId{1}, 0, msg(7, "01")}, {NodeId{2}, 0, msg(3, "02")}};
  const Trace tr = runScenario(s);
  ASSERT_FALSE(tr.failure);
  EXPECT_EQ(tr.rows[0][2], LLRow::kLost);
  EXPECT_EQ(tr.rows[1][2], LLRow::kWon);
  const std::vector<Delivery> expected{{3, msg(3, "02")}, {5, msg(7, "01")}};
  EXPECT_EQ(deliveries(tr, NodeId{1}), expected);
  EXPECT_EQ(deliveries(tr, NodeId{2}), expected);
  EXPECT_EQ(tr.as[0].at(3), Cell<AMessage>{msg(7, "01")});
}

TEST(RunScenarioTest, QueuedMessagesLeaveInPriorityOrder) {
  Scenario s;
  s.nodeCount = 1;
  s.horizon = 12;
  s.injections = {{NodeId{1}, 0, msg(9)}, {NodeId{1}, 1, msg(4)},
                  {NodeId{1}, 2, msg(6)}};
  const Trace tr = runScenario(s);
  std::vector<std::uint64_t> order;
  for (const Delivery& d : deliveries(tr)) order.push_back(d.message.id.value);
  EXPECT_EQ(order, (std::vector<std::uint64_t>{9, 4, 6}));
}

TEST(RunScenarioTest, InvalidScenarioThrows) {
  Scenario s = singleFrame();
  s.injections[0].tick = 6;
  EXPECT_THROW(runScenario(s), ScenarioError);
}

TEST(RunScenarioTest, HorizonZeroIsEmpty) {
  Scenario s;
  s.horizon = 0;
  const Trace tr = runScenario(s);
  EXPECT_EQ(tr.horizon(), 0u);
  EXPECT_EQ(tr.nodeCount(), 1u);
  EXPECT_FALSE(tr.failure);
}

TEST(RunScenarioTest, LiteralTableDeliversNothing) {
  Scenario s = singleFrame();
  s.options.fidelityMode = true;
  s.options.bootstrapRequestTick.reset();
  const Trace tr = runScenario(s);
  EXPECT_TRUE(deliveries(tr).empty());
  s.horizon = 6;
  s.options.bootstrapRequestTick = 0;
  const Trace primed = runScenario(s);
  EXPECT_TRUE(deliveries(primed).empty());
  EXPECT_EQ(primed.rows[0][2], LLRow::kNoVerdict);
}

TEST(RunScenarioTest, WithoutPrimingBuffersNeverOffer) {
  Scenario s = singleFrame();
  s.horizon = 16;
  s.options.bootstrapRequestTick.reset();
  const Trace tr = runScenario(s);
  EXPECT_TRUE(deliveries(tr).empty());
  for (Tick t = 0; t < tr.horizon(); ++t) EXPECT_TRUE(tr.as[0].at(t).empty());
}

TEST(RunScenarioTest, LatePrimingDelaysFirstOffer) {
  Scenario s = singleFrame();
  s.horizon = 10;
  s.options.bootstrapRequestTick = 3;
  const Trace tr = runScenario(s);
  // The message queued at t=0 is released into the slot at t=3, offered at 5.
  EXPECT_EQ(deliveries(tr), (std::vector<Delivery>{{7, msg(5, "ab")}}));
}

TEST(RunScenarioTest, DeterministicProperty) {
  testing::Gen g(31);
  for (int i = 0; i < 50; ++i) {
    const Scenario s = g.scenario(4, 24);
    EXPECT_EQ(runScenario(s), runScenario(s));
  }
}

TEST(RunScenarioTest, BoundaryRequestIsDelayedLogicalRequestProperty) {
  testing::Gen g(32);
  for (int i = 0; i < 60; ++i) {
    Scenario s = g.scenario(3, 24);
    s.options.reqDelay = g.below(4);
    const std::size_t d = s.options.reqDelay;
    const Trace tr = runScenario(s);
    ASSERT_FALSE(tr.failure);
    for (std::size_t n = 0; n < tr.nodeCount(); ++n) {
      for (Tick t = 0; t < tr.horizon(); ++t) {
        if (t < d) {
          EXPECT_TRUE(tr.r[n].at(t).empty());
        } else {
          EXPECT_EQ(tr.r[n].at(t), tr.lr[n].at(t - d));
        }
      }
    }
  }
}

TEST(RunScenarioTest, ReqDelayDoesNotChangeDeliveriesProperty) {
  testing::Gen g(33);
  for (int i = 0; i < 60; ++i) {
    Scenario s = g.scenario(3, 24);
    const auto base = deliveries(runScenario(s));
    s.options.reqDelay = 3;
    EXPECT_EQ(deliveries(runScenario(s)), base);
  }
}

TEST(TickSystemTest, ArityMismatch) {
  const SystemState st = initialSystemState(2, 1);
  std::vector<Cell<AMessage>> one(1);
  EXPECT_THROW(tickSystem(st, one, 0, {}), ContractError);
  EXPECT_THROW(tickCan(st, one, 0, {}), ContractError);
}

TEST(TickSystemTest, PurityOfStep) {
  const SystemState st = initialSystemState(2, 1);
  std::vector<Cell<AMessage>> in{{msg(1)}, {}};
  const TickResult a = tickSystem(st, in, 0, {});
  const TickResult b = tickSystem(st, in, 0, {});
  EXPECT_EQ(a.cells, b.cells);
  EXPECT_EQ(a.next, b.next);
  EXPECT_EQ(st, initialSystemState(2, 1));
}

TEST(RunCANOnlyTest, DeliversOfferedFrames) {
  TimedStream<AMessage> as1(8), as2(8);
  as1.at(1) = {msg(4, "aa")};
  as2.at(1) = {msg(2, "bb")};
  as1.at(3) = {msg(4, "aa")};
  const std::vector<TimedStream<AMessage>> streams{as1, as2};
  const Trace tr = runCANOnly(streams, 8);
  ASSERT_FALSE(tr.failure);
  EXPECT_EQ(tr.kind, TraceKind::kCanOnly);
  EXPECT_EQ(deliveries(tr),
            (std::vector<Delivery>{{3, msg(2, "bb")}, {5, msg(4, "aa")}}));
  EXPECT_EQ(tr.r[1].at(3), Cell<Req>{kReq});
}

TEST(RunCANOnlyTest, DisciplineViolationsRejected) {
  TimedStream<AMessage> as1(4), as2(4);
  as1.at(2) = {msg(4)};
  std::vector<TimedStream<AMessage>> streams{as1, as2};
  EXPECT_THROW(runCANOnly(streams, 4), ScenarioError);
  streams[0] = TimedStream<AMessage>(4);
  streams[0].at(1) = {msg(4)};
  streams[1].at(1) = {msg(4)};
  EXPECT_THROW(runCANOnly(streams, 4), ScenarioError);
  EXPECT_THROW(runCANOnly(streams, 5), ScenarioError);
  EXPECT_THROW(runCANOnly(std::vector<TimedStream<AMessage>>{}, 4), ScenarioError);
}

TEST(RunCANOnlyTest, CollisionEndsTraceWithFailure) {
  TimedStream<AMessage> as1(6);
  as1.at(1) = {msg(1)};
  as1.at(2) = {msg(2)};
  CanOnlyOptions opts;
  opts.enforceDiscipline = false;
  const Trace tr = runCANOnly(std::vector<TimedStream<AMessage>>{as1}, 6, opts);
  ASSERT_TRUE(tr.failure);
  EXPECT_EQ(tr.failure->tick, 2u);
  EXPECT_EQ(tr.failure->component, "encoder");
  ASSERT_TRUE(tr.failure->node);
  EXPECT_EQ(tr.failure->node->index, 1u);
  EXPECT_EQ(tr.horizon(), 2u);
}

TEST(RunBatchTest, MatchesSequentialRuns) {
  testing::Gen g(34);
  std::vector<Scenario> scenarios;
  for (int i = 0; i < 40; ++i) scenarios.push_back(g.scenario(4, 20));
  const auto batch = runBatch(scenarios, 4);
  ASSERT_EQ(batch.size(), scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    EXPECT_EQ(batch[i], runScenario(scenarios[i]));
  }
}

TEST(RunBatchTest, PropagatesScenarioError) {
  std::vector<Scenario> scenarios(3, singleFrame());
  scenarios[1].nodeCount = 0;
  EXPECT_THROW(runBatch(scenarios, 2), ScenarioError);
}

TEST(FindStreamTest, Names) {
  const Trace tr = runScenario(singleFrame());
  EXPECT_EQ(findStream(tr, "wr").type, StreamType::kMessage);
  EXPECT_EQ(findStream(tr, "as_1").type, StreamType::kAMessage);
  EXPECT_EQ(findStream(tr, "lr_1").type, StreamType::kReq);
  EXPECT_EQ(findStream(tr, "ar_1").cellSize(3), 1u);
  EXPECT_THROW(findStream(tr, "as_2"), ContractError);
  EXPECT_THROW(findStream(tr, "zz_1"), ContractError);
  EXPECT_THROW(findStream(tr, "as_"), ContractError);
}

}  // namespace
}  // namespace cansim
