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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "chainq/annealer.hpp"
#include "test_support.hpp"

namespace chainq {
namespace {

using testing::random_order;

AnnealConfig short_config(std::uint64_t seed) {
  AnnealConfig cfg;
  cfg.max_iter = 3000;
  cfg.seed = seed;
  return cfg;
}

TEST(Annealer, ConfigValidation) {
  AnnealConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.cooling = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = AnnealConfig{};
  cfg.ts = cfg.t0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = AnnealConfig{};
  cfg.max_iter = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_EQ(parse_encoder("ptc"), Encoder::Ptc);
  EXPECT_THROW(parse_encoder("qft"), std::invalid_argument);
}

TEST(Annealer, EncodingCostMatchesCircuits) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedGraph g = random_instance(12, 0.3, seed);
    const Order order = random_order(12, seed);
    EXPECT_EQ(encoding_cost(g, order, Encoder::Ptc),
              two_qubit_count(encode_ptc(g, order, 0.1, true).circuit));
    EXPECT_EQ(encoding_cost(g, order, Encoder::Swap), two_qubit_count(encode_swap(g, order, 0.1, true)));
  }
  EXPECT_THROW(encoding_cost(random_instance(4, 0.5, 0), {0, 1, 1, 2}, Encoder::Ptc),
               std::invalid_argument);
}

TEST(Annealer, CostInvariantUnderGraphAutomorphisms) {
  // Exchanging two isolated vertices maps the graph onto itself, so the set
  // of required pairs per chain position is unchanged.
  const WeightedGraph g(10, {{0, 1, 0.5}, {1, 2, 0.25}, {2, 5, 1.0}, {3, 5, 0.75}, {0, 4, 0.1}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Order order = random_order(10, seed);
    Order relabeled = order;
    for (int& v : relabeled) {
      if (v == 8) {
        v = 9;
      } else if (v == 9) {
        v = 8;
      }
    }
    for (Encoder enc : {Encoder::Ptc, Encoder::Swap}) {
      EXPECT_EQ(encoding_cost(g, relabeled, enc), encoding_cost(g, order, enc));
    }
  }
}

TEST(Annealer, CompleteGraphIsFlat) {
  const WeightedGraph g = complete_graph(7);
  for (Encoder enc : {Encoder::Ptc, Encoder::Swap}) {
    const AnnealTrace t = optimize_order(g, enc, short_config(3));
    EXPECT_EQ(t.best_cost, encoding_cost(g, identity_order(7), enc));
    for (const auto& r : t.records) EXPECT_EQ(r.current_cost, t.best_cost);
  }
}

TEST(Annealer, TraceIsReproducibleAndMonotone) {
  const WeightedGraph g = random_instance(14, 0.25, 5);
  for (Encoder enc : {Encoder::Ptc, Encoder::Swap}) {
    const AnnealTrace a = optimize_order(g, enc, short_config(9));
    const AnnealTrace b = optimize_order(g, enc, short_config(9));
    EXPECT_EQ(trace_to_csv(a), trace_to_csv(b));
    EXPECT_EQ(a.best_order, b.best_order);
    EXPECT_EQ(a.records.size(), 3000u);
    for (std::size_t k = 1; k < a.records.size(); ++k) {
      EXPECT_LE(a.records[k].best_cost, a.records[k - 1].best_cost);
    }
    EXPECT_LE(a.best_cost, a.initial_cost);
    EXPECT_EQ(encoding_cost(g, a.best_order, enc), a.best_cost);
  }
}

TEST(Annealer, DefaultRunIsBoundByIterationCap) {
  const WeightedGraph g = random_instance(6, 0.4, 1);
  const AnnealTrace t = optimize_order(g, Encoder::Ptc, AnnealConfig{});
  EXPECT_EQ(t.records.size(), 50000u);
  EXPECT_NEAR(t.records.front().temperature, 0.01, 1e-15);
}

TEST(Annealer, StopsAtStoppingTemperature) {
  AnnealConfig cfg;
  cfg.ts = 1e-6;
  const AnnealTrace t = optimize_order(random_instance(6, 0.4, 1), Encoder::Swap, cfg);
  // 0.01 * 0.999^k > 1e-6 holds for k < ln(1e-4)/ln(0.999), about 9206.
  EXPECT_EQ(t.records.size(), 9206u);
  EXPECT_GT(t.records.back().temperature, 1e-6);
}

TEST(Annealer, MetropolisRule) {
  std::mt19937_64 rng(42);
  EXPECT_TRUE(metropolis_accept(0.0, 0.01, rng));
  EXPECT_TRUE(metropolis_accept(-3.0, 0.01, rng));
  const double delta = 1.0;
  const double temperature = 1.5;
  const int trials = 10000;
  int accepted = 0;
  for (int k = 0; k < trials; ++k) accepted += metropolis_accept(delta, temperature, rng);
  const double p = std::exp(-delta / temperature);
  const double sigma = std::sqrt(trials * p * (1 - p));
  EXPECT_LT(std::abs(accepted - trials * p), 3 * sigma);
}

TEST(Annealer, TraceCsvHeader) {
  const AnnealTrace t = optimize_order(random_instance(5, 0.5, 0), Encoder::Ptc, short_config(1));
  std::istringstream in(trace_to_csv(t));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "iteration,temperature,current_cost,best_cost,accepted");
}

}  // namespace
}  // namespace chainq
