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
#include <random>
#include <string>
#include <vector>

#include "chainq/graph.hpp"
#include "chainq/ptc_encoder.hpp"
#include "chainq/swap_encoder.hpp"

namespace chainq {

enum class Encoder { Ptc, Swap };

const char* encoder_name(Encoder e);
Encoder parse_encoder(const std::string& name);

struct AnnealConfig {
  double t0 = 0.01;
  // Small enough that the iteration cap ends the run (0.01 * 0.999^50000 is
  // about 2e-24).
  double ts = 1e-30;
  double cooling = 0.999;
  int max_iter = 50000;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TraceRecord {
  int iteration = 0;
  double temperature = 0.0;
  std::size_t current_cost = 0;
  std::size_t best_cost = 0;
  bool accepted = false;
};

struct AnnealTrace {
  std::vector<TraceRecord> records;
  Order best_order;
  std::size_t initial_cost = 0;
  std::size_t best_cost = 0;
};

// Truncated single-layer CNOT count for a fixed graph, with the sweep or
// schedule built once.
class CostModel {
 public:
  CostModel(const WeightedGraph& g, Encoder encoder);
  std::size_t operator()(const Order& order) const;
  // Count of the untruncated encoding (order-independent).
  std::size_t full_count() const;

 private:
  const WeightedGraph* g_;
  Encoder encoder_;
  PtcSweep sweep_;
  EncodingSchedule schedule_;
};

// Two-qubit gate count of the truncated single-layer encoding under `order`.
std::size_t encoding_cost(const WeightedGraph& g, const Order& order, Encoder encoder);

// Metropolis rule: always accept delta <= 0, otherwise with exp(-delta / t).
bool metropolis_accept(double delta, double temperature, std::mt19937_64& rng);

// Simulated annealing over orders starting from the identity; each move
// exchanges two uniformly chosen positions.
AnnealTrace optimize_order(const WeightedGraph& g, Encoder encoder, const AnnealConfig& cfg,
                           bool keep_records = true);

std::string trace_to_csv(const AnnealTrace& trace);

}  // namespace chainq
