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

#include <cstddef>
#include <string>
#include <vector>

#include "chainq/gf2.hpp"
#include "chainq/graph.hpp"

namespace chainq {

enum class GateKind { CNOT, RZ, RX, H, RZZ, SWAP, ZZSWAP };

const char* gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);

// Rotation conventions: RZ(t) = exp(-i t/2 Z), RX(t) = exp(-i t/2 X),
// RZZ(t) = exp(-i t/2 Z Z), ZZSWAP(t) = SWAP * RZZ(t).
// For CNOT, q0 is the control and q1 the target.
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  double theta = 0.0;

  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target, 0.0}; }
  static Gate rz(int q, double t) { return {GateKind::RZ, q, -1, t}; }
  static Gate rx(int q, double t) { return {GateKind::RX, q, -1, t}; }
  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate rzz(int a, int b, double t) { return {GateKind::RZZ, a, b, t}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b, 0.0}; }
  static Gate zzswap(int a, int b, double t) { return {GateKind::ZZSWAP, a, b, t}; }

  bool operator==(const Gate& other) const = default;
};

// Gate list over a physical register.
//
// `initial_labels[q]` is the set of logical qubits whose parity physical
// qubit q holds at the start (identity unless the encoder chose another
// basis); `measurement_labels[q]` is the same at measurement time. Logical
// outcomes are recovered by inverting `measurement_labels` over GF(2).
struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
  bool chain_local = false;
  std::vector<Mask> initial_labels;
  std::vector<Mask> measurement_labels;

  Circuit() = default;
  explicit Circuit(int w, bool local = false);

  // Appends after checking qubit ranges and chain locality.
  void add(const Gate& g);
  void append(const Circuit& other);
};

// Physical-qubit labels over time: rows[0] is the initial state and
// rows[k] the state after gate k-1.
struct ParityLabelMatrix {
  std::vector<std::vector<Mask>> rows;
  const std::vector<Mask>& final_rows() const { return rows.back(); }
};

ParityLabelMatrix track_labels(const Circuit& c);
// Only the final rows; cheaper than the full history.
std::vector<Mask> final_labels(const Circuit& c);

Circuit decompose(const Circuit& c);

std::size_t two_qubit_count(const Circuit& c);

enum class DepthConvention { TwoQubitOnly, AllGates };
std::size_t depth(const Circuit& c, DepthConvention convention);

// Same quantities without decomposing, for targets with native ZZ gates.
std::size_t native_two_qubit_count(const Circuit& c);
std::size_t native_depth(const Circuit& c, DepthConvention convention);

// Maps measured physical bits to logical bits through the inverse of the
// final label matrix.
class ParityDecoder {
 public:
  ParityDecoder() = default;
  explicit ParityDecoder(std::vector<Mask> label_matrix);

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<Mask>& label_matrix() const { return labels_; }
  const std::vector<Mask>& inverse() const { return inverse_; }
  bool is_permutation() const;
  std::size_t rank() const;

  Bits decode(const Bits& measured) const;
  // Fast path for n <= 64: physical index -> logical index.
  std::uint64_t decode_index(std::uint64_t measured) const;

 private:
  std::vector<Mask> labels_;
  std::vector<Mask> inverse_;
  std::vector<std::uint64_t> inverse_words_;
};

ParityDecoder decoder_for(const Circuit& c);

// Line-oriented text form: `WIDTH`, `CHAIN_LOCAL`, `INIT` header lines, one
// gate per line (`CNOT c t`, `RZ q theta`, ...), then a `MEASMAP` trailer
// with one `<qubit> <hex label>` row per physical qubit.
std::string dump_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace chainq
