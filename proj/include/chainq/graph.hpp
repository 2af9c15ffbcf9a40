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

#include <cstdint>
#include <string>
#include <vector>

namespace chainq {

using Bits = std::vector<std::uint8_t>;

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Weighted MaxCut instance. Edges are normalized so that u < v and are kept
// in lexicographic (u, v) order.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<Edge> edges, std::uint64_t seed = 0);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::uint64_t seed() const { return seed_; }

  bool has_edge(int a, int b) const;
  // Weight of edge {a, b}, or 0 when absent.
  double weight(int a, int b) const;

  // Dense n*n weight table (0 where no edge); row-major.
  const std::vector<double>& weight_table() const { return table_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::uint64_t seed_ = 0;
  std::vector<double> table_;
};

struct CutSolution {
  Bits bits;
  double cost = 0.0;
};

double edge_density(const WeightedGraph& g);

// Uniformly samples floor(density * n(n-1)/2) distinct pairs with weights
// i.i.d. uniform on (0, 1].
WeightedGraph random_instance(int n, double target_density, std::uint64_t seed);

// Complete graph with all weights set to `w`.
WeightedGraph complete_graph(int n, double w = 1.0);

// sum over edges of w (2 x_k x_l - x_k - x_l); equals minus the cut weight.
double cut_cost(const WeightedGraph& g, const Bits& x);

inline constexpr int kBruteForceMaxQubits = 24;

// Exhaustive minimum of cut_cost; ties go to the lexicographically smallest
// bit vector (x[0] compared first).
CutSolution brute_force_optimum(const WeightedGraph& g);

std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& text);

Bits complement(const Bits& x);
// Character k of the string is x[k].
std::string bits_to_string(const Bits& x);
Bits bits_from_string(const std::string& s);
// Bit k of the index is x[k].
std::uint64_t bits_to_index(const Bits& x);
Bits index_to_bits(std::uint64_t index, int n);

// A qubit ordering: order[p] is the logical vertex placed at chain position p.
using Order = std::vector<int>;

Order identity_order(int n);
// Throws std::invalid_argument unless `order` is a bijection on [0, n).
void validate_order(const Order& order, int n);
Order inverse_order(const Order& order);

}  // namespace chainq
