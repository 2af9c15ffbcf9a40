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

#include "chainq/lr_qaoa.hpp"

#include <stdexcept>

#include "chainq/ptc_encoder.hpp"
#include "chainq/swap_encoder.hpp"

namespace chainq {

RampSchedule ramp(int p, double delta_beta, double delta_gamma) {
  if (p < 1) throw std::invalid_argument("ramp needs p >= 1");
  RampSchedule s;
  s.p = p;
  s.delta_beta = delta_beta;
  s.delta_gamma = delta_gamma;
  for (int i = 0; i < p; ++i) {
    s.betas.push_back((1.0 - static_cast<double>(i) / p) * delta_beta);
    s.gammas.push_back(static_cast<double>(i + 1) / p * delta_gamma);
  }
  return s;
}

double default_delta(int n) { return n <= 15 ? 0.63 : 0.3; }

const char* target_name(Target t) {
  switch (t) {
    case Target::IdealFc: return "fc";
    case Target::Ptc: return "ptc";
    case Target::Swap: return "swap";
  }
  return "?";
}

Target parse_target(const std::string& name) {
  if (name == "fc" || name == "ideal" || name == "ideal_fc") return Target::IdealFc;
  if (name == "ptc") return Target::Ptc;
  if (name == "swap") return Target::Swap;
  throw std::invalid_argument("unknown target '" + name + "' (expected fc, ptc or swap)");
}

namespace {

void add_mixer(Circuit& c, double beta) {
  for (int q = 0; q < c.width; ++q) c.add(Gate::rx(q, -2.0 * beta));
}

void add_ptc_layers(Circuit& c, const WeightedGraph& g, const Order& order,
                    const RampSchedule& sched, bool truncate) {
  const PtcSweep fwd = ptc_layer_sweep(g.n());
  const PtcSweep bwd = reverse_sweep(fwd);
  bool use_prefix = false;
  if (truncate) {
    // A truncated pass followed by its bare inverse returns to single labels;
    // worth it only when shorter than one full sweep.
    use_prefix = 2 * ptc_pass_count(fwd, g, order, true) < fwd.cnots.size();
  }
  for (int k = 0; k < sched.p; ++k) {
    const double gamma = sched.gammas[k];
    if (use_prefix) {
      const std::vector<Gate> pass = ptc_pass(fwd, g, order, gamma, true);
      for (const auto& gate : pass) c.add(gate);
      for (auto it = pass.rbegin(); it != pass.rend(); ++it) {
        if (it->kind == GateKind::CNOT) c.add(*it);
      }
    } else {
      for (const auto& gate : ptc_pass(k % 2 == 0 ? fwd : bwd, g, order, gamma, false)) c.add(gate);
    }
    add_mixer(c, sched.betas[k]);
  }
}

void add_swap_layers(Circuit& c, const WeightedGraph& g, const Order& order,
                     const RampSchedule& sched, bool truncate) {
  for (int k = 0; k < sched.p; ++k) {
    const Circuit layer = encode_swap(g, order, sched.gammas[k], truncate);
    if (k % 2 == 0) {
      for (const auto& gate : layer.gates) c.add(gate);
    } else {
      for (auto it = layer.gates.rbegin(); it != layer.gates.rend(); ++it) c.add(*it);
    }
    add_mixer(c, sched.betas[k]);
  }
}

}  // namespace

QaoaCircuit build_qaoa(const WeightedGraph& g, Target target, const Order& order,
                       const RampSchedule& sched, bool truncate) {
  const int n = g.n();
  if (sched.p < 1 || static_cast<int>(sched.betas.size()) != sched.p ||
      static_cast<int>(sched.gammas.size()) != sched.p) {
    throw std::invalid_argument("malformed ramp schedule");
  }
  if (target == Target::IdealFc) {
    Circuit c(n, false);
    for (int q = 0; q < n; ++q) c.add(Gate::h(q));
    for (int k = 0; k < sched.p; ++k) {
      for (const auto& e : g.edges()) c.add(Gate::rzz(e.u, e.v, 2.0 * sched.gammas[k] * e.w));
      add_mixer(c, sched.betas[k]);
    }
    c.measurement_labels = c.initial_labels;
    ParityDecoder d(c.measurement_labels);
    return {std::move(c), std::move(d)};
  }

  validate_order(order, n);
  Circuit c(n, true);
  for (int p = 0; p < n; ++p) c.initial_labels[p] = unit_mask(n, order[p]);
  for (int q = 0; q < n; ++q) c.add(Gate::h(q));
  if (n >= 2) {
    if (target == Target::Ptc) {
      add_ptc_layers(c, g, order, sched, truncate);
    } else {
      add_swap_layers(c, g, order, sched, truncate);
    }
  } else {
    for (int k = 0; k < sched.p; ++k) add_mixer(c, sched.betas[k]);
  }
  c.measurement_labels = final_labels(c);
  ParityDecoder d(c.measurement_labels);
  return {std::move(c), std::move(d)};
}

}  // namespace chainq
