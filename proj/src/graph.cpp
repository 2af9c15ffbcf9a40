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

#include "chainq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "chainq/errors.hpp"

namespace chainq {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, std::uint64_t seed)
    : n_(n), edges_(std::move(edges)), seed_(seed) {
  if (n_ < 1) throw InvalidInstance("graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) throw InvalidInstance("edge endpoint out of range");
    if (e.u == e.v) throw InvalidInstance("self-loop on vertex " + std::to_string(e.u));
    if (!std::isfinite(e.w) || e.w == 0.0) {
      throw InvalidInstance("edge weight must be finite and nonzero");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw InvalidInstance("duplicate edge (" + std::to_string(edges_[k].u) + ", " +
                            std::to_string(edges_[k].v) + ")");
    }
  }
  table_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
  for (const auto& e : edges_) {
    table_[static_cast<std::size_t>(e.u) * n_ + e.v] = e.w;
    table_[static_cast<std::size_t>(e.v) * n_ + e.u] = e.w;
  }
}

bool WeightedGraph::has_edge(int a, int b) const { return weight(a, b) != 0.0; }

double WeightedGraph::weight(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::out_of_range("vertex out of range");
  return table_[static_cast<std::size_t>(a) * n_ + b];
}

double edge_density(const WeightedGraph& g) {
  if (g.n() < 2) throw InvalidInstance("edge density needs n >= 2");
  const double pairs = 0.5 * g.n() * (g.n() - 1);
  return static_cast<double>(g.num_edges()) / pairs;
}

WeightedGraph random_instance(int n, double target_density, std::uint64_t seed) {
  if (n < 2) throw InvalidInstance("random_instance needs n >= 2");
  if (!(target_density > 0.0 && target_density <= 1.0)) {
    throw InvalidInstance("target density must lie in (0, 1]");
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  // A tiny slack keeps values such as 0.211 * 190 = 40.09 from rounding down
  // across a representable boundary.
  const auto count = static_cast<std::size_t>(std::floor(target_density * pairs + 1e-9));
  if (count == 0) throw InvalidInstance("requested density yields zero edges");

  std::vector<std::pair<int, int>> all;
  all.reserve(pairs);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates shuffle: the first `count` entries are a uniform sample.
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, pairs - 1);
    std::swap(all[k], all[pick(rng)]);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  edges.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    // 1 - U maps [0, 1) onto (0, 1].
    edges.push_back({all[k].first, all[k].second, 1.0 - unit(rng)});
  }
  return WeightedGraph(n, std::move(edges), seed);
}

WeightedGraph complete_graph(int n, double w) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  }
  return WeightedGraph(n, std::move(edges));
}

double cut_cost(const WeightedGraph& g, const Bits& x) {
  if (x.size() != static_cast<std::size_t>(g.n())) {
    throw std::invalid_argument("cut_cost: bit vector length " + std::to_string(x.size()) +
                                " does not match n = " + std::to_string(g.n()));
  }
  double c = 0.0;
  for (const auto& e : g.edges()) {
    const int a = x[e.u] != 0;
    const int b = x[e.v] != 0;
    c += e.w * (2 * a * b - a - b);
  }
  return c;
}

CutSolution brute_force_optimum(const WeightedGraph& g) {
  const int n = g.n();
  if (n > kBruteForceMaxQubits) {
    throw SizeLimitError("brute-force optimum limited to n <= " +
                         std::to_string(kBruteForceMaxQubits) + ", got " + std::to_string(n));
  }
  if (n == 1) return {Bits(1, 0), 0.0};

  // The cost is invariant under a global flip, and of each complementary pair
  // the member with x[0] = 0 is lexicographically smaller, so x[0] is fixed.
  // Index bit j (j = 0..n-2) stores x[n-1-j]; counting upward then visits the
  // remaining strings in lexicographic order.
  const int free_bits = n - 1;
  const std::uint64_t total = std::uint64_t{1} << free_bits;
  auto decode = [&](std::uint64_t idx) {
    Bits x(n, 0);
    for (int j = 0; j < free_bits; ++j) x[n - 1 - j] = (idx >> j) & 1U;
    return x;
  };

  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  // Cut weight maintained along a Gray-code walk; each flip changes it by the
  // signed weight of the flipped vertex's incident edges.
  Bits x(n, 0);
  double cut = 0.0;
  double best = 0.0;
  std::uint64_t best_idx = 0;
  constexpr double kTieTol = 1e-12;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int j = __builtin_ctzll(step);
    const int v = n - 1 - j;
    double delta = 0.0;
    for (const auto& [u, w] : adj[v]) delta += (x[u] == x[v]) ? w : -w;
    x[v] ^= 1U;
    cut += delta;
    const std::uint64_t idx = step ^ (step >> 1);
    const double cost = -cut;
    if (cost < best - kTieTol || (std::abs(cost - best) <= kTieTol && idx < best_idx)) {
      best = cost;
      best_idx = idx;
    }
  }
  CutSolution sol;
  sol.bits = decode(best_idx);
  sol.cost = cut_cost(g, sol.bits);
  return sol;
}

std::string graph_to_json(const WeightedGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.w});
  j["edges"] = edges;
  j["seed"] = g.seed();
  return j.dump(2) + "\n";
}

WeightedGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw InvalidInstance(std::string("instance JSON parse error: ") + err.what());
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& row : j.at("edges")) {
      if (!row.is_array() || row.size() != 3) {
        throw InvalidInstance("each edge must be [u, v, w]");
      }
      edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<double>()});
    }
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    return WeightedGraph(n, std::move(edges), seed);
  } catch (const nlohmann::json::exception& err) {
    throw InvalidInstance(std::string("instance JSON schema error: ") + err.what());
  }
}

Bits complement(const Bits& x) {
  Bits y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] ? 0 : 1;
  return y;
}

std::string bits_to_string(const Bits& x) {
  std::string s(x.size(), '0');
  for (std::size_t k = 0; k < x.size(); ++k) s[k] = x[k] ? '1' : '0';
  return s;
}

Bits bits_from_string(const std::string& s) {
  Bits x(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] != '0' && s[k] != '1') {
      throw std::invalid_argument("bit string may contain only 0 and 1: '" + s + "'");
    }
    x[k] = s[k] == '1';
  }
  return x;
}

std::uint64_t bits_to_index(const Bits& x) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k]) idx |= std::uint64_t{1} << k;
  }
  return idx;
}

Bits index_to_bits(std::uint64_t index, int n) {
  Bits x(n);
  for (int k = 0; k < n; ++k) x[k] = (index >> k) & 1U;
  return x;
}

Order identity_order(int n) {
  Order o(static_cast<std::size_t>(n));
  std::iota(o.begin(), o.end(), 0);
  return o;
}

void validate_order(const Order& order, int n) {
  if (order.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("order has length " + std::to_string(order.size()) +
                                ", expected " + std::to_string(n));
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("order is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[v] = 1;
  }
}

Order inverse_order(const Order& order) {
  Order inv(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) inv[order[p]] = static_cast<int>(p);
  return inv;
}

}  // namespace chainq
