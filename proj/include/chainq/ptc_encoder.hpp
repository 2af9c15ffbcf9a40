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

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "chainq/circuit.hpp"
#include "chainq/graph.hpp"

namespace chainq {

// A parity label of weight one or two over chain slots; unused entries are -1
// and present entries are sorted.
using SlotLabel = std::array<int, 2>;

enum class Direction { Forward, Backward };

// A CNOT sweep on the chain together with where and when every slot pair
// first appears as a physical parity.
//
// The labels form a spanning tree on the slots plus one virtual vertex (a
// weight-one label is an edge to it). Sweeps move the vertices along a path
// by odd-even transpositions: swapping two interior vertices costs a pair of
// CNOTs sharing a control ("rhombus"), swapping at a path end costs one
// ("triangle").
struct PtcSweep {
  int n = 0;
  std::vector<std::pair<int, int>> cnots;  // (control, target)
  std::vector<int> step_of;                // 1-based parallel step of each CNOT
  int num_steps = 0;
  std::vector<SlotLabel> initial_labels;
  std::vector<SlotLabel> final_labels;
  // Step at which pair {i, j} (i < j) first exists; 0 means before any CNOT.
  std::map<std::pair<int, int>, int> realization_time;
  std::map<std::pair<int, int>, int> realization_site;

  // Dense tables: index of the CNOT after which the pair first exists (-1 when
  // present initially) and the qubit holding it.
  int gate(int i, int j) const { return gate_table[static_cast<std::size_t>(i) * n + j]; }
  int site(int i, int j) const { return site_table[static_cast<std::size_t>(i) * n + j]; }
  std::vector<int> gate_table;
  std::vector<int> site_table;
};

// Single cost layer. The register right after the Hadamard layer is |+>^n in
// every parity basis, so the sweep starts from the path basis for free and
// runs the complete odd-even reversal of the n + 1 path vertices: n^2 - 1
// CNOTs in 2n + 2 steps, measured in the parity basis.
PtcSweep ptc_sweep(int n);

// Layer used between mixers: starts and ends with weight-one labels. An entry
// cascade builds the path, transposition steps run until every pair has
// appeared, and an exit cascade returns to single labels.
PtcSweep ptc_layer_sweep(int n);

// The same gates in reverse order, starting from the final labels.
PtcSweep reverse_sweep(const PtcSweep& s);

// Gates (CNOT and RZ) of one pass of `sweep` under `order`: RZ(2*gamma*w) is
// placed right after each edge's parity first appears. With truncation the
// pass stops at the last required parity and CNOTs whose targets are never
// read again are dropped.
std::vector<Gate> ptc_pass(const PtcSweep& sweep, const WeightedGraph& g, const Order& order,
                           double gamma, bool truncate);

// CNOT count of ptc_pass without building gates.
std::size_t ptc_pass_count(const PtcSweep& sweep, const WeightedGraph& g, const Order& order,
                           bool truncate);

// Physical labels (as logical masks) of a sweep's slot labels under `order`.
std::vector<Mask> slot_labels_to_masks(const std::vector<SlotLabel>& labels, const Order& order);

struct PtcEncoding {
  Circuit circuit;
  ParityDecoder decoder;
};

// One cost layer on the single-layer sweep (forward) or its reverse.
PtcEncoding encode_ptc(const WeightedGraph& g, const Order& order, double gamma, bool truncate,
                       Direction direction = Direction::Forward);

Bits decode(const ParityDecoder& d, const Bits& measured);

}  // namespace chainq
