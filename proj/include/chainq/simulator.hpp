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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chainq/circuit.hpp"
#include "chainq/graph.hpp"

namespace chainq {

inline constexpr int kStateVectorCap = 24;
inline constexpr int kDensityMatrixCap = 10;

using Complex = std::complex<double>;

// Basis index bit q is physical qubit q.
struct StateVector {
  int width = 0;
  std::vector<Complex> amplitudes;

  double norm() const;
  std::vector<double> probabilities() const;
};

// Row-major 2^width x 2^width matrix.
struct DensityMatrix {
  int width = 0;
  std::vector<Complex> rho;

  std::size_t dim() const { return std::size_t{1} << width; }
  Complex at(std::size_t r, std::size_t c) const { return rho[r * dim() + c]; }
  Complex trace() const;
  // Largest |rho - rho^dagger| entry.
  double hermiticity_error() const;
  double min_eigenvalue() const;
  std::vector<double> probabilities() const;
};

struct NoiseSpec {
  double eps_2q = 0.0;
  void validate() const;
};

// Runs decompose(c) from |0...0>.
StateVector simulate_ideal(const Circuit& c, int cap = kStateVectorCap);

// Runs decompose(c) from |0><0|; every CNOT is followed by the two-qubit
// depolarizing channel rho -> (1 - eps) rho + eps/4 Tr_ij(rho) (x) I_ij.
DensityMatrix simulate_noisy(const Circuit& c, const NoiseSpec& noise, int cap = kDensityMatrixCap);

// Probabilities over logical outcomes: entry x (bit k = logical bit k).
using Distribution = std::vector<double>;

Distribution logical_distribution(const std::vector<double>& physical, const ParityDecoder& decoder);

// Mass on the optimum and its global flip.
double success_probability(const Distribution& dist, const CutSolution& opt);

// Expected cost over the optimal cost.
double approximation_ratio(const Distribution& dist, const WeightedGraph& g, const CutSolution& opt);
double approximation_ratio(const std::vector<Bits>& samples, const WeightedGraph& g,
                           const CutSolution& opt);

// Seeded multinomial sampling of logical bit strings.
std::vector<Bits> sample(const Distribution& dist, int n, std::size_t shots, std::uint64_t seed);

// Samples physical outcomes of a state and decodes them.
std::vector<Bits> sample(const StateVector& state, const ParityDecoder& decoder, std::size_t shots,
                         std::uint64_t seed);

double total_variation(const Distribution& a, const Distribution& b);

// `bitstring,probability` rows, skipping entries at or below `threshold`.
std::string distribution_to_csv(const Distribution& dist, int n, double threshold = 0.0);

struct Metrics {
  double p_gs = 0.0;
  double r = 0.0;
  std::size_t n_g = 0;
  std::size_t depth_2q = 0;
  std::size_t depth_all = 0;
};

std::string metrics_to_json(const Metrics& m);

}  // namespace chainq
