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

#include "chainq/annealer.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace chainq {

const char* encoder_name(Encoder e) { return e == Encoder::Ptc ? "ptc" : "swap"; }

Encoder parse_encoder(const std::string& name) {
  if (name == "ptc") return Encoder::Ptc;
  if (name == "swap") return Encoder::Swap;
  throw std::invalid_argument("unknown encoder '" + name + "' (expected ptc or swap)");
}

void AnnealConfig::validate() const {
  if (!(cooling > 0.0 && cooling < 1.0)) {
    throw std::invalid_argument("cooling rate must lie in (0, 1)");
  }
  if (!(t0 > ts && ts > 0.0)) throw std::invalid_argument("temperatures must satisfy t0 > ts > 0");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
}

CostModel::CostModel(const WeightedGraph& g, Encoder encoder) : g_(&g), encoder_(encoder) {
  if (g.n() < 2) throw std::invalid_argument("cost model needs n >= 2");
  if (encoder == Encoder::Ptc) {
    sweep_ = ptc_sweep(g.n());
  } else {
    schedule_ = swap_schedule(g.n());
  }
}

std::size_t CostModel::operator()(const Order& order) const {
  if (encoder_ == Encoder::Ptc) return ptc_pass_count(sweep_, *g_, order, true);
  return swap_encoding_count(schedule_, *g_, order, true);
}

std::size_t CostModel::full_count() const {
  const Order id = identity_order(g_->n());
  if (encoder_ == Encoder::Ptc) return ptc_pass_count(sweep_, *g_, id, false);
  return swap_encoding_count(schedule_, *g_, id, false);
}

std::size_t encoding_cost(const WeightedGraph& g, const Order& order, Encoder encoder) {
  validate_order(order, g.n());
  return CostModel(g, encoder)(order);
}

bool metropolis_accept(double delta, double temperature, std::mt19937_64& rng) {
  if (delta <= 0.0) return true;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng) < std::exp(-delta / temperature);
}

AnnealTrace optimize_order(const WeightedGraph& g, Encoder encoder, const AnnealConfig& cfg,
                           bool keep_records) {
  cfg.validate();
  const int n = g.n();
  const CostModel cost(g, encoder);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);

  Order current = identity_order(n);
  std::size_t current_cost = cost(current);
  AnnealTrace trace;
  trace.initial_cost = current_cost;
  trace.best_order = current;
  trace.best_cost = current_cost;
  if (keep_records) trace.records.reserve(static_cast<std::size_t>(cfg.max_iter));

  double t = cfg.t0;
  for (int it = 0; it < cfg.max_iter && t > cfg.ts; ++it) {
    const int i = pick(rng);
    int j = pick(rng);
    while (j == i) j = pick(rng);
    std::swap(current[i], current[j]);
    const std::size_t proposed = cost(current);
    const double delta = static_cast<double>(proposed) - static_cast<double>(current_cost);
    const bool accepted = metropolis_accept(delta, t, rng);
    if (accepted) {
      current_cost = proposed;
      if (current_cost < trace.best_cost) {
        trace.best_cost = current_cost;
        trace.best_order = current;
      }
    } else {
      std::swap(current[i], current[j]);
    }
    if (keep_records) {
      trace.records.push_back({it, t, current_cost, trace.best_cost, accepted});
    }
    t *= cfg.cooling;
  }
  return trace;
}

std::string trace_to_csv(const AnnealTrace& trace) {
  std::string out = "iteration,temperature,current_cost,best_cost,accepted\n";
  for (const auto& r : trace.records) {
    out += fmt::format("{},{:.9g},{},{},{}\n", r.iteration, r.temperature, r.current_cost,
                       r.best_cost, r.accepted ? 1 : 0);
  }
  return out;
}

}  // namespace chainq
