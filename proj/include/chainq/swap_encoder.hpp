// Copyright 2026 The chainq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "chainq/circuit.hpp"
#include "chainq/graph.hpp"

namespace chainq {

// Odd-even brickwork of nearest-neighbour slots. Step 0 never exchanges its
// qubits: its pairs are interacted in place and the exchange is absorbed into
// the labelling, which leaves the set of pairs met later unchanged.
struct EncodingSchedule {
  int n = 0;
  // Slots (p, p + 1) of each step.
  std::vector<std::vector<std::pair<int, int>>> steps;
  // occupant[s][p]: logical qubit (identity order) at position p when step s starts.
  std::vector<std::vector<int>> occupant;
  // Step at which each unordered pair {i, j}, i < j, is adjacent in a slot.
  std::map<std::pair<int, int>, int> realization_time;

  int time(int i, int j) const { return time_table[static_cast<std::size_t>(i) * n + j]; }
  std::vector<int> time_table;
};

EncodingSchedule swap_schedule(int n);

// One cost layer: RZZ(2*gamma*w) for realized edges, SWAPs elsewhere, with
// terminal exchanges folded into the measurement labels. `order[p]` is the
// logical vertex initially at chain position p.
Circuit encode_swap(const WeightedGraph& g, const Order& order, double gamma, bool truncate);

// CNOT count of encode_swap without building the circuit.
std::size_t swap_encoding_count(const EncodingSchedule& sched, const WeightedGraph& g,
                                const Order& order, bool truncate);

struct FcResources {
  std::size_t gates = 0;
  std::size_t depth = 0;
};

// Closed forms (3/2) n^2 - (5/2) n + 1 and 3n - 2 for the complete graph.
FcResources swap_resources_fc(int n);

}  // namespace chainq
