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

// Reference model of correct bus behaviour computed from global knowledge,
// with no stream machinery and no shared code with the components.
//
// Each node owns a transmit mailbox and a priority queue. At every odd tick
// the mailbox with the lowest identifier wins the bus and is delivered to all
// nodes two ticks later. A mailbox is refilled from the queue head one tick
// after its frame won, or on any tick it is empty once priming has started.
// A mailbox that lost keeps its message; later arrivals queue behind it.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cansim/trace.hpp"
#include "cansim/types.hpp"

namespace cansim {

struct OracleResult {
  std::vector<Delivery> log;
  std::vector<Tick> duplicateTicks;  // frame starts with tied identifiers
};

// Deliveries that fall at or beyond the scenario horizon are not logged.
// An absent bootstrapRequestTick is treated as 0 and fidelityMode is
// ignored: the oracle always describes the intended behaviour.
OracleResult oracleRun(const Scenario& scenario);

struct Verdict {
  bool equivalent = false;
  std::vector<Delivery> simulator;
  std::vector<Delivery> oracle;
  // Empty when equivalent.
  std::string firstDivergence;
};

// Runs the simulator and the oracle and compares ar_1's delivery log with
// the oracle log, tick and message.
Verdict compareWithSimulator(const Scenario& scenario);
Verdict compareDeliveries(const std::vector<Delivery>& simulator,
                          const std::vector<Delivery>& oracle);

}  // namespace cansim
