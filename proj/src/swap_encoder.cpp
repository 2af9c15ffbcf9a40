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

#include "chainq/swap_encoder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chainq/errors.hpp"

namespace chainq {

EncodingSchedule swap_schedule(int n) {
  if (n < 2) throw InvalidInstance("swap_schedule needs n >= 2");
  EncodingSchedule s;
  s.n = n;
  s.time_table.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> arr(static_cast<std::size_t>(n));
  std::iota(arr.begin(), arr.end(), 0);
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t realized = 0;
  for (int step = 0; realized < total; ++step) {
    std::vector<std::pair<int, int>> slots;
    for (int p = step % 2; p + 1 < n; p += 2) slots.emplace_back(p, p + 1);
    s.occupant.push_back(arr);
    for (const auto& [p, q] : slots) {
      const int a = std::min(arr[p], arr[q]);
      const int b = std::max(arr[p], arr[q]);
      if (s.time_table[static_cast<std::size_t>(a) * n + b] < 0) {
        s.time_table[static_cast<std::size_t>(a) * n + b] = step;
        s.time_table[static_cast<std::size_t>(b) * n + a] = step;
        s.realization_time[{a, b}] = step;
        ++realized;
      }
      if (step > 0) std::swap(arr[p], arr[q]);
    }
    s.steps.push_back(std::move(slots));
  }
  return s;
}

namespace {

enum class Slot : std::uint8_t { None, Rzz, Swap, ZzSwap };

// Decides the gate for every slot; returns the index of the last step kept.
int plan_slots(const EncodingSchedule& sched, const WeightedGraph& g, const Order& order,
               bool truncate, std::vector<std::vector<Slot>>& plan) {
  const int n = sched.n;
  const auto& w = g.weight_table();
  const int num_steps = static_cast<int>(sched.steps.size());
  int last = num_steps - 1;
  if (truncate) {
    const Order inv = inverse_order(order);
    last = -1;
    for (const auto& e : g.edges()) last = std::max(last, sched.time(inv[e.u], inv[e.v]));
  }
  plan.resize(static_cast<std::size_t>(num_steps));
  for (int s = 0; s < num_steps; ++s) {
    auto& row = plan[s];
    row.assign(sched.steps[s].size(), Slot::None);
    if (s > last) continue;
    for (std::size_t k = 0; k < sched.steps[s].size(); ++k) {
      const auto [p, q] = sched.steps[s][k];
      const int a = order[sched.occupant[s][p]];
      const int b = order[sched.occupant[s][q]];
      const bool edge = w[static_cast<std::size_t>(a) * n + b] != 0.0;
      if (s == 0) {
        row[k] = edge ? Slot::Rzz : Slot::None;
      } else {
        row[k] = edge ? Slot::ZzSwap : Slot::Swap;
      }
    }
  }
  // Exchanges with no later gate on either qubit commute to the end, where the
  // measurement labels absorb them. Without truncation only the final step is
  // treated this way so that the full network keeps its shape.
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  const int stop = truncate ? 1 : std::max(1, last);
  for (int s = last; s >= stop; --s) {
    for (std::size_t k = 0; k < sched.steps[s].size(); ++k) {
      const auto [p, q] = sched.steps[s][k];
      Slot& slot = plan[s][k];
      if (!touched[p] && !touched[q]) {
        if (slot == Slot::ZzSwap) {
          slot = Slot::Rzz;
        } else if (slot == Slot::Swap) {
          slot = Slot::None;
        }
      }
      if (slot != Slot::None) touched[p] = touched[q] = 1;
    }
  }
  return last;
}

}  // namespace

Circuit encode_swap(const WeightedGraph& g, const Order& order, double gamma, bool truncate) {
  const int n = g.n();
  validate_order(order, n);
  Circuit c(n, true);
  for (int p = 0; p < n; ++p) c.initial_labels[p] = unit_mask(n, order[p]);
  if (n < 2) {
    c.measurement_labels = c.initial_labels;
    return c;
  }
  const EncodingSchedule sched = swap_schedule(n);
  std::vector<std::vector<Slot>> plan;
  const int last = plan_slots(sched, g, order, truncate, plan);
  for (int s = 0; s <= last; ++s) {
    for (std::size_t k = 0; k < sched.steps[s].size(); ++k) {
      const auto [p, q] = sched.steps[s][k];
      const int a = order[sched.occupant[s][p]];
      const int b = order[sched.occupant[s][q]];
      const double theta = 2.0 * gamma * g.weight(a, b);
      switch (plan[s][k]) {
        case Slot::Rzz: c.add(Gate::rzz(p, q, theta)); break;
        case Slot::ZzSwap: c.add(Gate::zzswap(p, q, theta)); break;
        case Slot::Swap: c.add(Gate::swap(p, q)); break;
        case Slot::None: break;
      }
    }
  }
  c.measurement_labels = final_labels(c);
  return c;
}

std::size_t swap_encoding_count(const EncodingSchedule& sched, const WeightedGraph& g,
                                const Order& order, bool truncate) {
  if (g.n() < 2) return 0;
  thread_local std::vector<std::vector<Slot>> plan;
  const int last = plan_slots(sched, g, order, truncate, plan);
  std::size_t count = 0;
  for (int s = 0; s <= last; ++s) {
    for (Slot slot : plan[s]) {
      if (slot == Slot::Rzz) count += 2;
      if (slot == Slot::Swap || slot == Slot::ZzSwap) count += 3;
    }
  }
  return count;
}

FcResources swap_resources_fc(int n) {
  if (n < 2) throw InvalidInstance("swap_resources_fc needs n >= 2");
  const auto nn = static_cast<std::size_t>(n);
  // (3n^2 - 5n + 2) / 2 is always an integer.
  return {(3 * nn * nn - 5 * nn + 2) / 2, 3 * nn - 2};
}

}  // namespace chainq
