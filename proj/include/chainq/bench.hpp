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

#include <cstdint>
#include <string>
#include <vector>

#include "chainq/annealer.hpp"
#include "chainq/graph.hpp"
#include "chainq/lr_qaoa.hpp"

namespace chainq {

// One transpiled single layer. Methods produced here: "fc" (native ZZ on a
// fully connected device), "ptc", "swap" (untruncated, identity order) and
// "ptc+sa", "swap+sa" (annealed order, truncated). Imported baselines may use
// any name.
struct ResourceRecord {
  std::string method;
  int n_q = 0;
  double e_d = 0.0;
  std::uint64_t seed = 0;
  std::size_t n_g = 0;
  std::size_t depth_2q = 0;
  std::size_t depth_all = 0;
  double time_s = 0.0;
};

struct CrossoverRecord {
  std::string method;
  int n_q = 0;
  double threshold_mean = 0.0;
  double threshold_std = 0.0;
  std::vector<double> thresholds;  // one per seed
};

struct NoiseRecord {
  std::string target;
  double eps = 0.0;
  double p_gs = 0.0;
  double r = 0.0;
};

const std::vector<std::string>& bench_methods();

// Builds the instance random_instance(n_q, e_d, seed) and transpiles it with
// `method`; the annealer uses cfg with its seed replaced by `seed`.
ResourceRecord transpile_record(const std::string& method, int n_q, double e_d, std::uint64_t seed,
                                const AnnealConfig& cfg);

// One record per (density, method, seed); cells run on up to `jobs` threads
// and come back in grid order.
std::vector<ResourceRecord> density_sweep(int n_q, const std::vector<double>& densities,
                                          const std::vector<std::string>& methods,
                                          const std::vector<std::uint64_t>& seeds,
                                          const AnnealConfig& cfg, int jobs = 1);

// Rows per (eps, target) for a p-layer linear-ramp circuit on the density
// matrix simulator, identity order, no truncation.
std::vector<NoiseRecord> noise_sweep(const WeightedGraph& g, int p, double delta_beta,
                                     double delta_gamma, const std::vector<double>& eps_grid,
                                     int jobs = 1);

// `method,n_q,e_d,seed,n_g,depth_2q,depth_all,time_s`.
std::string results_to_csv(const std::vector<ResourceRecord>& records);
// Parses the same schema; duplicate (method, n_q, e_d, seed) keys keep the
// last row and log a warning. Malformed rows raise ParseError.
std::vector<ResourceRecord> parse_results_csv(const std::string& text);
std::vector<ResourceRecord> import_baseline(const std::string& path);

std::string noise_to_csv(const std::vector<NoiseRecord>& rows);
std::string crossover_to_csv(const std::vector<CrossoverRecord>& rows);

// Published Qiskit transpiler (optimization level 3) counts for one layer at
// 20, 60 and 120 qubits, as method "qiskit-t".
std::vector<ResourceRecord> table1_qiskit_baseline();

// Densities on which `baseline` has a record for n_q, ascending.
std::vector<double> baseline_densities(const std::vector<ResourceRecord>& baseline, int n_q);

// Density at which the method's n_g falls below the baseline: linear
// interpolation of (method - baseline) between the last grid point where it
// is not below and the first where it is; the lowest grid density when the
// method already wins there and 1 when it never wins. A grid density missing
// from the baseline raises CoverageError.
double crossover_density(const std::vector<double>& grid, const std::vector<double>& method_n_g,
                         const std::vector<double>& baseline_n_g);

std::vector<CrossoverRecord> crossover_map(const std::vector<int>& n_q_list,
                                           const std::vector<double>& density_grid,
                                           const std::vector<ResourceRecord>& baseline,
                                           const std::string& method,
                                           const std::vector<std::uint64_t>& seeds,
                                           const AnnealConfig& cfg, int jobs = 1);

}  // namespace chainq
