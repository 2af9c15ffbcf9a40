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

#include <string>
#include <vector>

#include "chainq/circuit.hpp"
#include "chainq/graph.hpp"

namespace chainq {

// Linear ramp: betas[i] = (1 - i/p) delta_beta, gammas[i] = (i + 1)/p delta_gamma.
struct RampSchedule {
  int p = 0;
  double delta_beta = 0.0;
  double delta_gamma = 0.0;
  std::vector<double> betas;
  std::vector<double> gammas;
};

RampSchedule ramp(int p, double delta_beta, double delta_gamma);

// 0.63 up to 15 qubits, 0.3 beyond.
double default_delta(int n);

enum class Target { IdealFc, Ptc, Swap };

const char* target_name(Target t);
Target parse_target(const std::string& name);

struct QaoaCircuit {
  Circuit circuit;
  // Maps measured physical bits to logical bits (a permutation for swap and
  // the identity for the ideal target).
  ParityDecoder decoder;
};

// Hadamards, then p rounds of cost layer and RX(-2 beta) mixer. Encoded
// targets alternate sweep direction between rounds so that every round starts
// from the labels the previous one left. `order` is ignored for IdealFc.
QaoaCircuit build_qaoa(const WeightedGraph& g, Target target, const Order& order,
                       const RampSchedule& sched, bool truncate);

}  // namespace chainq
