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

#include "chainq/errors.hpp"
#include "chainq/lr_qaoa.hpp"
#include "chainq/ptc_encoder.hpp"
#include "chainq/simulator.hpp"
#include "test_support.hpp"

namespace chainq {
namespace {

TEST(Simulator, BasicGates) {
  Circuit h(1, false);
  h.add(Gate::h(0));
  const StateVector s = simulate_ideal(h);
  EXPECT_NEAR(s.amplitudes[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.amplitudes[1].real(), 1 / std::sqrt(2.0), 1e-15);
  Circuit cx(2, false);
  cx.add(Gate::cnot(0, 1));
  EXPECT_NEAR(std::abs(simulate_ideal(cx).amplitudes[0]), 1.0, 1e-15);
  Circuit big(kStateVectorCap + 1, false);
  EXPECT_THROW(simulate_ideal(big), SizeLimitError);
  EXPECT_THROW(simulate_noisy(Circuit(kDensityMatrixCap + 1, false), NoiseSpec{}), SizeLimitError);
  EXPECT_THROW(simulate_noisy(cx, NoiseSpec{1.5}), std::invalid_argument);
}

TEST(Simulator, NormIsPreserved) {
  const QaoaCircuit q = build_qaoa(random_instance(7, 0.5, 3), Target::Ptc, identity_order(7),
                                   ramp(3, 0.63, 0.63), false);
  EXPECT_NEAR(simulate_ideal(q.circuit).norm(), 1.0, 1e-10);
}

TEST(Simulator, NoiselessDensityMatrixMatchesStateVector) {
  const QaoaCircuit q = build_qaoa(random_instance(5, 0.7, 1), Target::Swap, identity_order(5),
                                   ramp(2, 0.63, 0.63), false);
  const auto a = simulate_ideal(q.circuit).probabilities();
  const auto b = simulate_noisy(q.circuit, NoiseSpec{0.0}).probabilities();
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-10);
}

TEST(Simulator, FullDepolarizationOfOneCnot) {
  Circuit c(2, false);
  c.add(Gate::cnot(0, 1));
  const DensityMatrix rho = simulate_noisy(c, NoiseSpec{1.0});
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(rho.at(r, k) - (r == k ? 0.25 : 0.0)), 0.0, 1e-15);
  }
}

TEST(Simulator, DisjointGateOrderIsIrrelevant) {
  Circuit a(4, false), b(4, false);
  for (int q = 0; q < 4; ++q) {
    a.add(Gate::h(q));
    b.add(Gate::h(q));
  }
  a.add(Gate::rzz(0, 1, 0.3));
  a.add(Gate::cnot(2, 3));
  b.add(Gate::cnot(2, 3));
  b.add(Gate::rzz(0, 1, 0.3));
  a.add(Gate::rx(1, 0.2));
  b.add(Gate::rx(1, 0.2));
  const auto pa = simulate_noisy(a, NoiseSpec{0.05}).probabilities();
  const auto pb = simulate_noisy(b, NoiseSpec{0.05}).probabilities();
  for (std::size_t k = 0; k < pa.size(); ++k) EXPECT_NEAR(pa[k], pb[k], 1e-10);
}

TEST(Simulator, SuccessProbabilityAndRatio) {
  const WeightedGraph edge(2, {{0, 1, 1.0}});
  const CutSolution opt = brute_force_optimum(edge);
  Distribution point(4, 0.0);
  point[bits_to_index(opt.bits)] = 1.0;
  EXPECT_DOUBLE_EQ(success_probability(point, opt), 1.0);
  EXPECT_DOUBLE_EQ(approximation_ratio(point, edge, opt), 1.0);
  const Distribution uniform(4, 0.25);
  EXPECT_DOUBLE_EQ(success_probability(uniform, opt), 0.5);
  EXPECT_DOUBLE_EQ(approximation_ratio(uniform, edge, opt), 0.5);
  const WeightedGraph g = random_instance(6, 0.6, 4);
  const Distribution flat(64, 1.0 / 64);
  EXPECT_NEAR(success_probability(flat, brute_force_optimum(g)), 2.0 / 64, 1e-15);
  const std::vector<Bits> samples(5, opt.bits);
  EXPECT_DOUBLE_EQ(approximation_ratio(samples, edge, opt), 1.0);
  EXPECT_THROW(approximation_ratio(uniform, WeightedGraph(2, {}), CutSolution{{0, 0}, 0.0}), UndefinedMetric);
}

TEST(Simulator, HeavyNoiseApproachesUniformRatio) {
  const WeightedGraph g = random_instance(4, 1.0, 2);
  const CutSolution opt = brute_force_optimum(g);
  const QaoaCircuit q = build_qaoa(g, Target::Ptc, identity_order(4), ramp(4, 0.63, 0.63), false);
  const Distribution d = logical_distribution(simulate_noisy(q.circuit, NoiseSpec{0.75}).probabilities(), q.decoder);
  const Distribution uniform(16, 1.0 / 16);
  EXPECT_NEAR(approximation_ratio(d, g, opt), approximation_ratio(uniform, g, opt), 1e-3);
}

TEST(Simulator, NoisyStatesStayPhysical) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const QaoaCircuit q = build_qaoa(random_instance(4, 0.8, seed), Target::Ptc, identity_order(4),
                                     ramp(2, 0.63, 0.63), seed % 2 == 0);
    for (double eps : {0.0, 0.01, 0.2, 1.0}) {
      const DensityMatrix rho = simulate_noisy(q.circuit, NoiseSpec{eps});
      EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
      EXPECT_NEAR(rho.trace().imag(), 0.0, 1e-10);
      EXPECT_LT(rho.hermiticity_error(), 1e-10);
      EXPECT_GE(rho.min_eigenvalue(), -1e-9);
    }
  }
}

TEST(Simulator, SamplingIsSeededAndDecoded) {
  Distribution point(8, 0.0);
  point[5] = 1.0;
  for (const auto& x : sample(point, 3, 20, 1)) EXPECT_EQ(bits_to_index(x), 5u);
  const Distribution d = {0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(sample(d, 2, 50, 7), sample(d, 2, 50, 7));

  // Prepare a logical basis state through the parity encoding and decode it.
  const PtcEncoding e = encode_ptc(complete_graph(5), testing::random_order(5, 3), 0.0, false);
  const Bits target = {1, 0, 1, 1, 0};
  Circuit c = e.circuit;
  c.gates.clear();
  Mask x(5);
  for (int k = 0; k < 5; ++k) x[k] = target[k];
  const Mask y = gf2_apply(c.measurement_labels, x);
  for (int q = 0; q < 5; ++q) {
    if (y[q]) {
      c.add(Gate::h(q));
      c.add(Gate::rz(q, M_PI));
      c.add(Gate::h(q));
    }
  }
  for (const auto& s : sample(simulate_ideal(c), e.decoder, 10, 3)) EXPECT_EQ(s, target);
}

TEST(Simulator, OutputFormats) {
  const Distribution d = {0.0, 0.25, 0.75, 0.0};
  EXPECT_EQ(distribution_to_csv(d, 2), "bitstring,probability\n10,0.25\n01,0.75\n");
  const std::string j = metrics_to_json(Metrics{0.5, 0.9, 10, 4, 6});
  EXPECT_NE(j.find("\"p_gs\": 0.5"), std::string::npos);
  EXPECT_NE(j.find("\"depth_all\": 6"), std::string::npos);
}

}  // namespace
}  // namespace chainq
