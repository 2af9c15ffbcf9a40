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

#include <set>

#include "chainq/errors.hpp"
#include "chainq/ptc_encoder.hpp"
#include "test_support.hpp"

namespace chainq {
namespace {

using testing::logical_amplitudes;
using testing::max_abs_diff;
using testing::phase_state;
using testing::random_order;

TEST(PtcEncoder, SingleLayerCountAndDepth) {
  for (int n = 2; n <= 30; ++n) {
    const PtcSweep s = ptc_sweep(n);
    EXPECT_EQ(s.cnots.size(), static_cast<std::size_t>(n * n - 1)) << "n=" << n;
    const PtcEncoding e = encode_ptc(complete_graph(n), identity_order(n), 0.2, false);
    EXPECT_EQ(two_qubit_count(e.circuit), static_cast<std::size_t>(n * n - 1));
    if (n >= 3) {
      EXPECT_EQ(depth(e.circuit, DepthConvention::TwoQubitOnly), static_cast<std::size_t>(2 * n + 2))
          << "n=" << n;
    }
  }
  EXPECT_EQ(ptc_sweep(20).cnots.size(), 399u);
  EXPECT_THROW(ptc_sweep(1), InvalidInstance);
}

TEST(PtcEncoder, LayerSweepReturnsToSingleLabels) {
  for (int n = 2; n <= 16; ++n) {
    const PtcSweep s = ptc_layer_sweep(n);
    const std::size_t expected = n == 2 ? 2 : n == 3 ? 7 : static_cast<std::size_t>(n * n - 2);
    EXPECT_EQ(s.cnots.size(), expected) << "n=" << n;
    std::set<int> seen;
    for (const auto& l : s.final_labels) {
      EXPECT_EQ(l[1], -1);
      seen.insert(l[0]);
    }
    EXPECT_EQ(static_cast<int>(seen.size()), n);
    const PtcSweep r = reverse_sweep(s);
    EXPECT_EQ(r.final_labels, s.initial_labels);
  }
}

TEST(PtcEncoder, EncodesThePhaseOperator) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const WeightedGraph g = random_instance(n, 0.6, seed);
    const Order order = random_order(n, seed + 7);
    for (bool truncate : {false, true}) {
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        const PtcEncoding e = encode_ptc(g, order, 0.41, truncate, dir);
        EXPECT_TRUE(e.circuit.chain_local);
        EXPECT_LT(max_abs_diff(logical_amplitudes(e.circuit), phase_state(g, 0.41)), 1e-10);
      }
    }
  }
}

TEST(PtcEncoder, FastCountMatchesCircuit) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 14);
    const WeightedGraph g = random_instance(n, 0.4, seed);
    const PtcSweep s = ptc_sweep(n);
    const Order order = random_order(n, seed);
    for (bool truncate : {false, true}) {
      EXPECT_EQ(ptc_pass_count(s, g, order, truncate),
                two_qubit_count(encode_ptc(g, order, 0.1, truncate).circuit));
    }
  }
}

TEST(PtcEncoder, SingleEdgeTruncatesToInitialParity) {
  // The path basis already holds the parity of neighbouring slots.
  const WeightedGraph g(2, {{0, 1, 1.0}});
  const PtcEncoding e = encode_ptc(g, identity_order(2), 0.5, true);
  EXPECT_EQ(two_qubit_count(e.circuit), 0u);
  ASSERT_EQ(e.circuit.gates.size(), 1u);
  EXPECT_EQ(e.circuit.gates[0].kind, GateKind::RZ);
  EXPECT_DOUBLE_EQ(e.circuit.gates[0].theta, 1.0);
}

TEST(PtcEncoder, DecodeRecoversLogicalBits) {
  const PtcEncoding e = encode_ptc(complete_graph(5), identity_order(5), 0.3, false);
  for (std::uint64_t x = 0; x < 32; ++x) {
    const Mask xm = [&] {
      Mask m(5);
      for (int k = 0; k < 5; ++k) m[k] = (x >> k) & 1;
      return m;
    }();
    const Mask y = gf2_apply(e.circuit.measurement_labels, xm);
    EXPECT_EQ(bits_to_index(decode(e.decoder, index_to_bits(y.to_ulong(), 5))), x);
  }
}

TEST(PtcEncoder, RealizationTablesAgreeWithReplay) {
  const PtcSweep s = ptc_sweep(7);
  for (const auto& [pair, step] : s.realization_time) {
    const int gate = s.gate(pair.first, pair.second);
    if (gate < 0) {
      EXPECT_EQ(step, 0);
    } else {
      EXPECT_EQ(step, s.step_of[static_cast<std::size_t>(gate)]);
      EXPECT_EQ(s.site(pair.first, pair.second), s.cnots[static_cast<std::size_t>(gate)].second);
    }
  }
  EXPECT_EQ(s.realization_time.size(), 21u);
}

}  // namespace
}  // namespace chainq
