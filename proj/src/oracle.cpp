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

#include "cansim/oracle.hpp"

#include <list>
#include <map>

#include "cansim/system.hpp"

namespace cansim {

namespace {

constexpr Tick kFrameLength = 2;

struct Node {
  std::optional<AMessage> mailbox;
  std::list<AMessage> queue;  // ascending id, arrival order among equals

  void enqueue(const AMessage& m) {
    auto pos = queue.begin();
    while (pos != queue.end() && pos->id.value <= m.id.value) ++pos;
    queue.insert(pos, m);
  }

  void refill() {
    if (queue.empty()) {
      mailbox.reset();
      return;
    }
    mailbox = queue.front();
    queue.pop_front();
  }
};

std::string render(const std::vector<Delivery>& log, std::size_t k) {
  if (k >= log.size()) return "nothing";
  return toString(log[k].message) + " at tick " + std::to_string(log[k].tick);
}

}  // namespace

OracleResult oracleRun(const Scenario& scenario) {
  OracleResult out;
  const Tick primeFrom = scenario.options.bootstrapRequestTick.value_or(0);
  std::vector<Node> nodes(scenario.nodeCount);

  std::map<Tick, std::vector<std::pair<std::size_t, AMessage>>> arrivals;
  for (const Injection& inj : scenario.injections) {
    arrivals[inj.tick].emplace_back(inj.node.index - 1, inj.message);
  }

  std::optional<std::size_t> refillDue;  // winner of the previous tick's frame
  for (Tick t = 0; t < scenario.horizon; ++t) {
    std::optional<std::size_t> winner;
    if (t % 2 == 1) {
      std::size_t ties = 0;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].mailbox) continue;
        if (!winner || nodes[i].mailbox->id.value <
                           nodes[*winner].mailbox->id.value) {
          winner = i;
          ties = 1;
        } else if (nodes[i].mailbox->id.value ==
                   nodes[*winner].mailbox->id.value) {
          ++ties;
        }
      }
      if (ties > 1) out.duplicateTicks.push_back(t);
      if (winner && t + kFrameLength < scenario.horizon) {
        out.log.push_back({t + kFrameLength, *nodes[*winner].mailbox});
      }
    }

    if (auto it = arrivals.find(t); it != arrivals.end()) {
      for (const auto& [node, message] : it->second) {
        nodes[node].enqueue(message);
      }
    }

    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const bool won = refillDue == i;
      const bool idle = t >= primeFrom && !nodes[i].mailbox;
      if (won || idle) nodes[i].refill();
    }
    refillDue = winner;
  }
  return out;
}

Verdict compareDeliveries(const std::vector<Delivery>& simulator,
                          const std::vector<Delivery>& oracle) {
  Verdict v;
  v.simulator = simulator;
  v.oracle = oracle;
  v.equivalent = simulator == oracle;
  if (!v.equivalent) {
    std::size_t k = 0;
    while (k < simulator.size() && k < oracle.size() &&
           simulator[k] == oracle[k]) {
      ++k;
    }
    v.firstDivergence = "delivery #" + std::to_string(k + 1) +
                        ": simulator " + render(simulator, k) + ", oracle " +
                        render(oracle, k);
  }
  return v;
}

Verdict compareWithSimulator(const Scenario& scenario) {
  const Trace trace = runScenario(scenario);
  return compareDeliveries(deliveries(trace), oracleRun(scenario).log);
}

}  // namespace cansim
