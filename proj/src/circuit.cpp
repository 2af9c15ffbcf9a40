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

#include "chainq/circuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "chainq/errors.hpp"

namespace chainq {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT: return "CNOT";
    case GateKind::RZ: return "RZ";
    case GateKind::RX: return "RX";
    case GateKind::H: return "H";
    case GateKind::RZZ: return "RZZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::ZZSWAP: return "ZZSWAP";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::RZZ || kind == GateKind::SWAP ||
         kind == GateKind::ZZSWAP;
}

Circuit::Circuit(int w, bool local)
    : width(w),
      chain_local(local),
      initial_labels(identity_rows(static_cast<std::size_t>(w))),
      measurement_labels(identity_rows(static_cast<std::size_t>(w))) {}

void Circuit::add(const Gate& g) {
  auto check = [&](int q) {
    if (q < 0 || q >= width) {
      throw std::out_of_range(fmt::format("{} acts on qubit {} outside width {}",
                                          gate_name(g.kind), q, width));
    }
  };
  check(g.q0);
  if (is_two_qubit(g.kind)) {
    check(g.q1);
    if (g.q0 == g.q1) {
      throw std::invalid_argument(fmt::format("{} needs two distinct qubits", gate_name(g.kind)));
    }
    if (chain_local && std::abs(g.q0 - g.q1) != 1) {
      throw std::invalid_argument(fmt::format("{} on ({}, {}) is not chain-local",
                                              gate_name(g.kind), g.q0, g.q1));
    }
  }
  gates.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.width != width) throw std::invalid_argument("append: width mismatch");
  for (const auto& g : other.gates) add(g);
}

namespace {

void apply_label_update(std::vector<Mask>& lab, const Gate& g) {
  switch (g.kind) {
    case GateKind::CNOT:
      lab[g.q1] ^= lab[g.q0];
      break;
    case GateKind::SWAP:
    case GateKind::ZZSWAP:
      std::swap(lab[g.q0], lab[g.q1]);
      break;
    case GateKind::RZ:
    case GateKind::RZZ:
      break;
    case GateKind::RX:
    case GateKind::H:
      // Meaningful as a logical gate only on a qubit that holds one logical bit.
      if (lab[g.q0].count() != 1) {
        throw TrackingUnsupported(fmt::format("{} on qubit {} which holds a multi-qubit parity",
                                              gate_name(g.kind), g.q0));
      }
      break;
  }
}

std::vector<Mask> starting_labels(const Circuit& c) {
  if (c.initial_labels.size() == static_cast<std::size_t>(c.width)) return c.initial_labels;
  return identity_rows(static_cast<std::size_t>(c.width));
}

}  // namespace

ParityLabelMatrix track_labels(const Circuit& c) {
  ParityLabelMatrix m;
  m.rows.reserve(c.gates.size() + 1);
  m.rows.push_back(starting_labels(c));
  for (const auto& g : c.gates) {
    auto next = m.rows.back();
    apply_label_update(next, g);
    m.rows.push_back(std::move(next));
  }
  return m;
}

std::vector<Mask> final_labels(const Circuit& c) {
  auto lab = starting_labels(c);
  for (const auto& g : c.gates) apply_label_update(lab, g);
  return lab;
}

Circuit decompose(const Circuit& c) {
  Circuit out(c.width, c.chain_local);
  out.initial_labels = c.initial_labels;
  out.measurement_labels = c.measurement_labels;
  out.gates.reserve(c.gates.size() * 2);
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::RZZ:
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        out.gates.push_back(Gate::rz(g.q1, g.theta));
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        break;
      case GateKind::SWAP:
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        out.gates.push_back(Gate::cnot(g.q1, g.q0));
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        break;
      case GateKind::ZZSWAP:
        // After the first CNOT q1 holds the parity, so the rotation is ZZ;
        // the remaining two CNOTs complete the exchange.
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        out.gates.push_back(Gate::rz(g.q1, g.theta));
        out.gates.push_back(Gate::cnot(g.q1, g.q0));
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        break;
      default:
        out.gates.push_back(g);
    }
  }
  return out;
}

std::size_t two_qubit_count(const Circuit& c) {
  std::size_t count = 0;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::CNOT: count += 1; break;
      case GateKind::RZZ: count += 2; break;
      case GateKind::SWAP:
      case GateKind::ZZSWAP: count += 3; break;
      default: break;
    }
  }
  return count;
}

namespace {

std::size_t asap_depth(const Circuit& d, DepthConvention convention) {
  std::vector<std::size_t> level(static_cast<std::size_t>(d.width), 0);
  std::size_t best = 0;
  for (const auto& g : d.gates) {
    const bool two = is_two_qubit(g.kind);
    if (!two && convention == DepthConvention::TwoQubitOnly) continue;
    std::size_t at = level[g.q0];
    if (two) at = std::max(at, level[g.q1]);
    ++at;
    level[g.q0] = at;
    if (two) level[g.q1] = at;
    best = std::max(best, at);
  }
  return best;
}

}  // namespace

std::size_t depth(const Circuit& c, DepthConvention convention) {
  return asap_depth(decompose(c), convention);
}

std::size_t native_depth(const Circuit& c, DepthConvention convention) {
  return asap_depth(c, convention);
}

std::size_t native_two_qubit_count(const Circuit& c) {
  return static_cast<std::size_t>(std::count_if(c.gates.begin(), c.gates.end(),
                                                [](const Gate& g) { return is_two_qubit(g.kind); }));
}

ParityDecoder::ParityDecoder(std::vector<Mask> label_matrix) : labels_(std::move(label_matrix)) {
  auto inv = gf2_inverse(labels_);
  if (!inv) throw std::invalid_argument("measurement label matrix is singular over GF(2)");
  inverse_ = std::move(*inv);
  if (labels_.size() <= 64) {
    inverse_words_.reserve(inverse_.size());
    for (const auto& row : inverse_) inverse_words_.push_back(row.empty() ? 0 : row.to_ulong());
  }
}

bool ParityDecoder::is_permutation() const {
  for (const auto& row : labels_) {
    if (row.count() != 1) return false;
  }
  return true;
}

std::size_t ParityDecoder::rank() const { return gf2_rank(labels_); }

Bits ParityDecoder::decode(const Bits& measured) const {
  if (measured.size() != labels_.size()) {
    throw std::invalid_argument(fmt::format("decode: expected {} bits, got {}", labels_.size(),
                                            measured.size()));
  }
  Mask y(labels_.size());
  for (std::size_t k = 0; k < measured.size(); ++k) {
    if (measured[k]) y.set(k);
  }
  const Mask x = gf2_apply(inverse_, y);
  Bits out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x.test(k);
  return out;
}

std::uint64_t ParityDecoder::decode_index(std::uint64_t measured) const {
  if (inverse_words_.size() != labels_.size()) {
    throw SizeLimitError("decode_index supports at most 64 qubits");
  }
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < inverse_words_.size(); ++i) {
    if (__builtin_parityll(inverse_words_[i] & measured)) x |= std::uint64_t{1} << i;
  }
  return x;
}

ParityDecoder decoder_for(const Circuit& c) { return ParityDecoder(c.measurement_labels); }

std::string dump_circuit(const Circuit& c) {
  std::string out;
  out += "# chainq circuit\n";
  out += fmt::format("WIDTH {}\n", c.width);
  out += fmt::format("CHAIN_LOCAL {}\n", c.chain_local ? 1 : 0);
  out += "INIT";
  for (const auto& m : c.initial_labels) out += " " + mask_to_hex(m);
  out += "\n";
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::CNOT:
      case GateKind::SWAP:
        out += fmt::format("{} {} {}\n", gate_name(g.kind), g.q0, g.q1);
        break;
      case GateKind::H:
        out += fmt::format("H {}\n", g.q0);
        break;
      case GateKind::RZ:
      case GateKind::RX:
        out += fmt::format("{} {} {:.17g}\n", gate_name(g.kind), g.q0, g.theta);
        break;
      case GateKind::RZZ:
      case GateKind::ZZSWAP:
        out += fmt::format("{} {} {} {:.17g}\n", gate_name(g.kind), g.q0, g.q1, g.theta);
        break;
    }
  }
  out += "MEASMAP\n";
  for (std::size_t q = 0; q < c.measurement_labels.size(); ++q) {
    out += fmt::format("{} {}\n", q, mask_to_hex(c.measurement_labels[q]));
  }
  return out;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  Circuit c;
  bool have_width = false;
  bool in_measmap = false;
  std::vector<Mask> meas;
  std::vector<Mask> init;
  bool local = false;
  std::vector<std::pair<Gate, std::size_t>> gates;
  auto hex_mask = [&](const std::string& hex) {
    try {
      return mask_from_hex(hex, static_cast<std::size_t>(c.width));
    } catch (const std::exception& err) {
      throw ParseError(err.what(), lineno);
    }
  };
  auto need = [&](std::istringstream& ls, auto& value, const char* what) {
    if (!(ls >> value)) throw ParseError(std::string("missing or invalid ") + what, lineno);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (in_measmap) {
      if (!have_width) throw ParseError("MEASMAP before WIDTH", lineno);
      int q = -1;
      try {
        q = std::stoi(head);
      } catch (const std::exception&) {
        throw ParseError("MEASMAP row must start with a qubit index", lineno);
      }
      std::string hex;
      need(ls, hex, "label");
      if (q != static_cast<int>(meas.size())) throw ParseError("MEASMAP rows out of order", lineno);
      meas.push_back(hex_mask(hex));
      continue;
    }
    if (head == "WIDTH") {
      need(ls, c.width, "width");
      if (c.width < 0) throw ParseError("negative width", lineno);
      have_width = true;
    } else if (head == "CHAIN_LOCAL") {
      int flag = 0;
      need(ls, flag, "flag");
      local = flag != 0;
    } else if (head == "INIT") {
      if (!have_width) throw ParseError("INIT before WIDTH", lineno);
      std::string hex;
      while (ls >> hex) init.push_back(hex_mask(hex));
    } else if (head == "MEASMAP") {
      in_measmap = true;
    } else {
      Gate g;
      if (head == "CNOT" || head == "SWAP") {
        g.kind = head == "CNOT" ? GateKind::CNOT : GateKind::SWAP;
        need(ls, g.q0, "qubit");
        need(ls, g.q1, "qubit");
      } else if (head == "H") {
        g.kind = GateKind::H;
        need(ls, g.q0, "qubit");
      } else if (head == "RZ" || head == "RX") {
        g.kind = head == "RZ" ? GateKind::RZ : GateKind::RX;
        need(ls, g.q0, "qubit");
        need(ls, g.theta, "angle");
      } else if (head == "RZZ" || head == "ZZSWAP") {
        g.kind = head == "RZZ" ? GateKind::RZZ : GateKind::ZZSWAP;
        need(ls, g.q0, "qubit");
        need(ls, g.q1, "qubit");
        need(ls, g.theta, "angle");
      } else {
        throw ParseError("unknown gate '" + head + "'", lineno);
      }
      gates.emplace_back(g, lineno);
    }
  }
  if (!have_width) throw ParseError("missing WIDTH line", lineno);
  Circuit out(c.width, local);
  for (const auto& [g, at] : gates) {
    try {
      out.add(g);
    } catch (const std::exception& err) {
      throw ParseError(err.what(), at);
    }
  }
  if (!init.empty()) {
    if (init.size() != static_cast<std::size_t>(c.width)) throw ParseError("INIT row count", lineno);
    out.initial_labels = std::move(init);
  }
  if (!meas.empty()) {
    if (meas.size() != static_cast<std::size_t>(c.width)) {
      throw ParseError("MEASMAP row count", lineno);
    }
    out.measurement_labels = std::move(meas);
  }
  return out;
}

}  // namespace chainq
