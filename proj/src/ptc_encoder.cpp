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

#include "chainq/ptc_encoder.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "chainq/errors.hpp"

namespace chainq {

namespace {

SlotLabel make_label(int a, int b) {
  if (a < 0) return {b, -1};
  if (b < 0) return {a, -1};
  return {std::min(a, b), std::max(a, b)};
}

int weight(const SlotLabel& l) { return (l[0] >= 0) + (l[1] >= 0); }

// Symmetric difference of two labels; the twine invariant keeps it at weight
// one or two, anything else is a construction bug.
SlotLabel xor_labels(const SlotLabel& x, const SlotLabel& y) {
  int items[4];
  int count = 0;
  for (int v : x) {
    if (v >= 0) items[count++] = v;
  }
  for (int v : y) {
    if (v < 0) continue;
    int* hit = std::find(items, items + count, v);
    if (hit != items + count) {
      *hit = items[--count];
    } else {
      items[count++] = v;
    }
  }
  if (count == 0 || count > 2) {
    throw std::logic_error(fmt::format("parity label of weight {} violates the twine invariant",
                                       count));
  }
  return count == 1 ? SlotLabel{items[0], -1} : make_label(items[0], items[1]);
}

class SweepBuilder {
 public:
  explicit SweepBuilder(int n) : n_(n) {}

  std::vector<SlotLabel>& labels() { return lab_; }

  void cx(int c, int t) {
    lab_[t] = xor_labels(lab_[t], lab_[c]);
    cnots_.emplace_back(c, t);
    if (weight(lab_[t]) == 2) realized_.at(pair_index(lab_[t])) = 1;
  }

  void mark_initial() {
    realized_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& l : lab_) {
      if (weight(l) == 2) realized_[pair_index(l)] = 1;
    }
  }

  bool all_realized() const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (!realized_[static_cast<std::size_t>(i) * n_ + j]) return false;
      }
    }
    return true;
  }

  // One odd-even transposition step of the vertex path. verts[k] is the slot
  // at path position k (-1 for the virtual vertex); physical qubit k is the
  // edge between positions k and k + 1.
  void transpose_layer(std::vector<int>& verts, int parity) {
    for (int i = parity; i < n_; i += 2) {
      if (i + 1 < n_) cx(i, i + 1);
    }
    for (int i = parity; i < n_; i += 2) {
      if (i - 1 >= 0) cx(i, i - 1);
    }
    for (int i = parity; i < n_; i += 2) std::swap(verts[i], verts[i + 1]);
  }

  std::vector<std::pair<int, int>> take_cnots() { return std::move(cnots_); }

 private:
  std::size_t pair_index(const SlotLabel& l) const {
    return static_cast<std::size_t>(l[0]) * n_ + l[1];
  }

  int n_;
  std::vector<SlotLabel> lab_;
  std::vector<std::pair<int, int>> cnots_;
  std::vector<char> realized_;
};

std::vector<SlotLabel> path_labels(const std::vector<int>& verts) {
  std::vector<SlotLabel> lab;
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) lab.push_back(make_label(verts[k], verts[k + 1]));
  return lab;
}

// Fills step numbers (ASAP layering), final labels and realization tables by
// replaying the CNOTs from the initial labels.
void finish_sweep(PtcSweep& s) {
  const int n = s.n;
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  s.step_of.clear();
  s.num_steps = 0;
  for (const auto& [c, t] : s.cnots) {
    const int at = std::max(level[c], level[t]) + 1;
    level[c] = level[t] = at;
    s.step_of.push_back(at);
    s.num_steps = std::max(s.num_steps, at);
  }

  s.gate_table.assign(static_cast<std::size_t>(n) * n, -2);
  s.site_table.assign(static_cast<std::size_t>(n) * n, -1);
  s.realization_time.clear();
  s.realization_site.clear();
  auto record = [&](const SlotLabel& l, int gate, int site, int step) {
    if (weight(l) != 2) return;
    const std::size_t idx = static_cast<std::size_t>(l[0]) * n + l[1];
    if (s.gate_table[idx] != -2) return;
    const std::size_t mirror = static_cast<std::size_t>(l[1]) * n + l[0];
    s.gate_table[idx] = s.gate_table[mirror] = gate;
    s.site_table[idx] = s.site_table[mirror] = site;
    s.realization_time[{l[0], l[1]}] = step;
    s.realization_site[{l[0], l[1]}] = site;
  };
  std::vector<SlotLabel> lab = s.initial_labels;
  for (int q = 0; q < n; ++q) record(lab[q], -1, q, 0);
  for (std::size_t k = 0; k < s.cnots.size(); ++k) {
    const auto [c, t] = s.cnots[k];
    lab[t] = xor_labels(lab[t], lab[c]);
    record(lab[t], static_cast<int>(k), t, s.step_of[k]);
  }
  s.final_labels = lab;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s.gate(i, j) == -2) {
        throw std::logic_error(fmt::format("sweep never realizes pair ({}, {})", i, j));
      }
    }
  }
}

}  // namespace

PtcSweep ptc_sweep(int n) {
  if (n < 2) throw InvalidInstance("ptc_sweep needs n >= 2");
  std::vector<int> verts(static_cast<std::size_t>(n) + 1);
  verts[0] = -1;
  for (int k = 0; k < n; ++k) verts[k + 1] = k;

  SweepBuilder b(n);
  b.labels() = path_labels(verts);
  b.mark_initial();
  PtcSweep s;
  s.n = n;
  s.initial_labels = b.labels();
  // n + 1 odd-even steps reverse the n + 1 path vertices; every comparator
  // exchanges, so each vertex pair is transposed exactly once.
  for (int layer = 0; layer <= n; ++layer) b.transpose_layer(verts, layer % 2);
  if (b.labels() != path_labels(verts)) throw std::logic_error("sweep labels drifted from path");
  s.cnots = b.take_cnots();
  finish_sweep(s);
  return s;
}

PtcSweep ptc_layer_sweep(int n) {
  if (n < 2) throw InvalidInstance("ptc_layer_sweep needs n >= 2");
  SweepBuilder b(n);
  for (int k = 0; k < n; ++k) b.labels().push_back({k, -1});
  b.mark_initial();
  PtcSweep s;
  s.n = n;
  s.initial_labels = b.labels();

  // Entry cascade, right to left, produces the path (virtual, 0, 1, ..., n-1).
  for (int j = n - 2; j >= 0; --j) b.cx(j, j + 1);
  std::vector<int> verts(static_cast<std::size_t>(n) + 1);
  verts[0] = -1;
  for (int k = 0; k < n; ++k) verts[k + 1] = k;

  for (int layer = 0; !b.all_realized(); ++layer) b.transpose_layer(verts, layer % 2);
  if (b.labels() != path_labels(verts)) throw std::logic_error("sweep labels drifted from path");

  // Exit cascade outward from the virtual vertex leaves one slot per qubit.
  const int z = static_cast<int>(std::find(verts.begin(), verts.end(), -1) - verts.begin());
  for (int e = z - 2; e >= 0; --e) b.cx(e + 1, e);
  for (int e = z + 1; e < n; ++e) b.cx(e - 1, e);
  for (const auto& l : b.labels()) {
    if (weight(l) != 1) throw std::logic_error("layer sweep does not end on single labels");
  }
  s.cnots = b.take_cnots();
  finish_sweep(s);
  return s;
}

PtcSweep reverse_sweep(const PtcSweep& s) {
  PtcSweep r;
  r.n = s.n;
  r.cnots.assign(s.cnots.rbegin(), s.cnots.rend());
  r.initial_labels = s.final_labels;
  finish_sweep(r);
  return r;
}

std::vector<Mask> slot_labels_to_masks(const std::vector<SlotLabel>& labels, const Order& order) {
  const std::size_t n = order.size();
  std::vector<Mask> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    Mask m(n);
    for (int v : l) {
      if (v >= 0) m.flip(static_cast<std::size_t>(order[v]));
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

struct RzEvent {
  int gate;
  int site;
  double weight;
};

// Computes which CNOTs of the pass survive. Returns the index of the last
// CNOT considered (-1 when none).
int plan_pass(const PtcSweep& sweep, const WeightedGraph& g, const Order& order, bool truncate,
              std::vector<RzEvent>& events, std::vector<char>& keep) {
  const Order inv = inverse_order(order);
  events.clear();
  events.reserve(g.num_edges());
  int cut = -1;
  for (const auto& e : g.edges()) {
    const int a = inv[e.u];
    const int b = inv[e.v];
    const int gate = sweep.gate(a, b);
    events.push_back({gate, sweep.site(a, b), e.w});
    cut = std::max(cut, gate);
  }
  // Stable order keeps edges sorted within one gate.
  std::stable_sort(events.begin(), events.end(),
                   [](const RzEvent& x, const RzEvent& y) { return x.gate < y.gate; });
  if (!truncate) cut = static_cast<int>(sweep.cnots.size()) - 1;
  keep.assign(static_cast<std::size_t>(cut + 1), 1);
  if (!truncate) return cut;

  // Backward liveness: a CNOT matters only if its target is read later, by a
  // rotation or by a kept CNOT.
  thread_local std::vector<char> live;
  live.assign(static_cast<std::size_t>(sweep.n), 0);
  auto ev = events.rbegin();
  for (int k = cut; k >= 0; --k) {
    while (ev != events.rend() && ev->gate == k) {
      live[ev->site] = 1;
      ++ev;
    }
    const auto [c, t] = sweep.cnots[k];
    if (live[t]) {
      live[c] = 1;
    } else {
      keep[k] = 0;
    }
  }
  return cut;
}

}  // namespace

std::vector<Gate> ptc_pass(const PtcSweep& sweep, const WeightedGraph& g, const Order& order,
                           double gamma, bool truncate) {
  validate_order(order, g.n());
  if (sweep.n != g.n()) throw std::invalid_argument("sweep width does not match graph");
  std::vector<RzEvent> events;
  std::vector<char> keep;
  const int cut = plan_pass(sweep, g, order, truncate, events, keep);
  std::vector<Gate> gates;
  auto ev = events.begin();
  auto emit_rz = [&](int gate) {
    while (ev != events.end() && ev->gate == gate) {
      gates.push_back(Gate::rz(ev->site, 2.0 * gamma * ev->weight));
      ++ev;
    }
  };
  emit_rz(-1);
  for (int k = 0; k <= cut; ++k) {
    if (keep[k]) gates.push_back(Gate::cnot(sweep.cnots[k].first, sweep.cnots[k].second));
    emit_rz(k);
  }
  return gates;
}

std::size_t ptc_pass_count(const PtcSweep& sweep, const WeightedGraph& g, const Order& order,
                           bool truncate) {
  const int total = static_cast<int>(sweep.cnots.size());
  if (!truncate) return static_cast<std::size_t>(total);
  const int n = sweep.n;
  // Each CNOT creates at most one new pair, so one rotation site per gate
  // suffices and no sorting is needed.
  thread_local std::vector<int> inv;
  thread_local std::vector<int> site_at;
  thread_local std::vector<char> live;
  inv.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) inv[order[p]] = p;
  site_at.assign(static_cast<std::size_t>(total), -1);
  int cut = -1;
  for (const auto& e : g.edges()) {
    const std::size_t idx = static_cast<std::size_t>(inv[e.u]) * n + inv[e.v];
    const int gate = sweep.gate_table[idx];
    if (gate < 0) continue;
    site_at[gate] = sweep.site_table[idx];
    cut = std::max(cut, gate);
  }
  live.assign(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  for (int k = cut; k >= 0; --k) {
    if (site_at[k] >= 0) live[site_at[k]] = 1;
    const auto [c, t] = sweep.cnots[k];
    if (live[t]) {
      live[c] = 1;
      ++count;
    }
  }
  return count;
}

PtcEncoding encode_ptc(const WeightedGraph& g, const Order& order, double gamma, bool truncate,
                       Direction direction) {
  validate_order(order, g.n());
  PtcSweep sweep = ptc_sweep(g.n());
  if (direction == Direction::Backward) sweep = reverse_sweep(sweep);
  Circuit c(g.n(), true);
  c.initial_labels = slot_labels_to_masks(sweep.initial_labels, order);
  for (const auto& gate : ptc_pass(sweep, g, order, gamma, truncate)) c.add(gate);
  c.measurement_labels = final_labels(c);
  ParityDecoder d(c.measurement_labels);
  return {std::move(c), std::move(d)};
}

Bits decode(const ParityDecoder& d, const Bits& measured) { return d.decode(measured); }

}  // namespace chainq
