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

#include "chainq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "chainq/errors.hpp"
#include "chainq/ptc_encoder.hpp"
#include "chainq/simulator.hpp"
#include "chainq/swap_encoder.hpp"

namespace chainq {

namespace {

// Runs task(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Circuit fc_layer(const WeightedGraph& g) {
  Circuit c(g.n(), false);
  for (const auto& e : g.edges()) c.add(Gate::rzz(e.u, e.v, 2.0 * e.w));
  return c;
}

std::string fmt_double(double x) { return fmt::format("{:.10g}", x); }

}  // namespace

const std::vector<std::string>& bench_methods() {
  static const std::vector<std::string> methods = {"fc", "ptc", "ptc+sa", "swap", "swap+sa"};
  return methods;
}

ResourceRecord transpile_record(const std::string& method, int n_q, double e_d, std::uint64_t seed,
                                const AnnealConfig& cfg) {
  const WeightedGraph g = random_instance(n_q, e_d, seed);
  ResourceRecord rec;
  rec.method = method;
  rec.n_q = n_q;
  rec.e_d = e_d;
  rec.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  Circuit c;
  const Order id = identity_order(n_q);
  if (method == "fc") {
    c = fc_layer(g);
  } else if (method == "ptc") {
    c = encode_ptc(g, id, 1.0, false).circuit;
  } else if (method == "swap") {
    c = encode_swap(g, id, 1.0, false);
  } else if (method == "ptc+sa" || method == "swap+sa") {
    AnnealConfig run = cfg;
    run.seed = seed;
    const Encoder enc = method == "ptc+sa" ? Encoder::Ptc : Encoder::Swap;
    const AnnealTrace trace = optimize_order(g, enc, run, false);
    c = enc == Encoder::Ptc ? encode_ptc(g, trace.best_order, 1.0, true).circuit
                            : encode_swap(g, trace.best_order, 1.0, true);
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  rec.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (method == "fc") {
    rec.n_g = native_two_qubit_count(c);
    rec.depth_2q = native_depth(c, DepthConvention::TwoQubitOnly);
    rec.depth_all = native_depth(c, DepthConvention::AllGates);
  } else {
    rec.n_g = two_qubit_count(c);
    rec.depth_2q = depth(c, DepthConvention::TwoQubitOnly);
    rec.depth_all = depth(c, DepthConvention::AllGates);
  }
  return rec;
}

std::vector<ResourceRecord> density_sweep(int n_q, const std::vector<double>& densities,
                                          const std::vector<std::string>& methods,
                                          const std::vector<std::uint64_t>& seeds,
                                          const AnnealConfig& cfg, int jobs) {
  cfg.validate();
  std::vector<std::tuple<double, std::string, std::uint64_t>> cells;
  for (double d : densities) {
    for (const auto& m : methods) {
      for (auto s : seeds) cells.emplace_back(d, m, s);
    }
  }
  std::vector<ResourceRecord> out(cells.size());
  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    const auto& [d, m, s] = cells[i];
    out[i] = transpile_record(m, n_q, d, s, cfg);
  });
  return out;
}

std::vector<NoiseRecord> noise_sweep(const WeightedGraph& g, int p, double delta_beta,
                                     double delta_gamma, const std::vector<double>& eps_grid,
                                     int jobs) {
  if (g.n() > kDensityMatrixCap) {
    throw SizeLimitError(fmt::format("noise sweep of {} qubits exceeds the density-matrix cap of {}",
                                     g.n(), kDensityMatrixCap));
  }
  const RampSchedule sched = ramp(p, delta_beta, delta_gamma);
  const CutSolution opt = brute_force_optimum(g);
  const std::vector<Target> targets = {Target::IdealFc, Target::Ptc, Target::Swap};
  std::vector<QaoaCircuit> circuits;
  for (Target t : targets) circuits.push_back(build_qaoa(g, t, identity_order(g.n()), sched, false));
  std::vector<NoiseRecord> out(eps_grid.size() * targets.size());
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    const std::size_t e = i / targets.size();
    const std::size_t t = i % targets.size();
    const DensityMatrix rho = simulate_noisy(circuits[t].circuit, NoiseSpec{eps_grid[e]});
    const Distribution dist = logical_distribution(rho.probabilities(), circuits[t].decoder);
    out[i] = {target_name(targets[t]), eps_grid[e], success_probability(dist, opt),
              approximation_ratio(dist, g, opt)};
  });
  return out;
}

std::string results_to_csv(const std::vector<ResourceRecord>& records) {
  std::string out = "method,n_q,e_d,seed,n_g,depth_2q,depth_all,time_s\n";
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{:.6f}\n", r.method, r.n_q, fmt_double(r.e_d), r.seed,
                       r.n_g, r.depth_2q, r.depth_all, r.time_s);
  }
  return out;
}

std::vector<ResourceRecord> parse_results_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<ResourceRecord> out;
  std::map<std::tuple<std::string, int, double, std::uint64_t>, std::size_t> seen;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (!header_done) {
      header_done = true;
      if (!fields.empty() && fields[0] == "method") {
        if (fields.size() != 8) throw ParseError("header must have 8 columns", lineno);
        continue;
      }
    }
    if (fields.size() != 8) {
      throw ParseError(fmt::format("expected 8 fields, found {}", fields.size()), lineno);
    }
    ResourceRecord r;
    try {
      std::size_t used = 0;
      auto whole = [&](const std::string& s) {
        if (used != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
      };
      r.method = fields[0];
      if (r.method.empty()) throw std::invalid_argument("empty method name");
      r.n_q = std::stoi(fields[1], &used);
      whole(fields[1]);
      r.e_d = std::stod(fields[2], &used);
      whole(fields[2]);
      r.seed = std::stoull(fields[3], &used);
      whole(fields[3]);
      r.n_g = std::stoull(fields[4], &used);
      whole(fields[4]);
      r.depth_2q = std::stoull(fields[5], &used);
      whole(fields[5]);
      r.depth_all = std::stoull(fields[6], &used);
      whole(fields[6]);
      r.time_s = fields[7].empty() ? 0.0 : std::stod(fields[7], &used);
      if (!fields[7].empty()) whole(fields[7]);
    } catch (const std::exception& e) {
      throw ParseError(fmt::format("malformed field ({})", e.what()), lineno);
    }
    if (r.n_q < 0 || !(r.e_d >= 0.0 && r.e_d <= 1.0)) {
      throw ParseError("n_q must be non-negative and e_d within [0, 1]", lineno);
    }
    const auto key = std::make_tuple(r.method, r.n_q, r.e_d, r.seed);
    auto it = seen.find(key);
    if (it != seen.end()) {
      spdlog::warn("line {}: duplicate record for ({}, {}, {}, {}); keeping the later row", lineno,
                   r.method, r.n_q, r.e_d, r.seed);
      out[it->second] = r;
    } else {
      seen.emplace(key, out.size());
      out.push_back(r);
    }
  }
  return out;
}

std::vector<ResourceRecord> import_baseline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open baseline file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_results_csv(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

std::string noise_to_csv(const std::vector<NoiseRecord>& rows) {
  std::string out = "target,eps,p_gs,r\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{:.12g},{:.12g}\n", r.target, fmt_double(r.eps), r.p_gs, r.r);
  }
  return out;
}

std::string crossover_to_csv(const std::vector<CrossoverRecord>& rows) {
  std::string out = "method,n_q,threshold_mean,threshold_std,thresholds\n";
  for (const auto& r : rows) {
    std::string per;
    for (double t : r.thresholds) per += (per.empty() ? "" : ";") + fmt::format("{:.4f}", t);
    out += fmt::format("{},{},{:.4f},{:.4f},{}\n", r.method, r.n_q, r.threshold_mean,
                       r.threshold_std, per);
  }
  return out;
}

std::vector<ResourceRecord> table1_qiskit_baseline() {
  struct Row {
    int n;
    double d;
    std::size_t n_g;
    std::size_t depth;
    double t;
  };
  static const Row rows[] = {
      {20, 0.211, 182, 108, 0.09},    {20, 0.298, 270, 189, 0.10},    {20, 0.386, 365, 194, 0.12},
      {20, 0.649, 598, 319, 0.21},    {20, 1.0, 715, 183, 0.63},      {60, 0.068, 928, 172, 0.34},
      {60, 0.171, 2823, 528, 0.70},   {60, 0.275, 4162, 762, 1.07},   {60, 0.586, 6645, 998, 1.53},
      {60, 1.0, 6966, 578, 2.13},     {120, 0.034, 2985, 378, 0.76},  {120, 0.141, 12926, 1786, 3.06},
      {120, 0.248, 18769, 2417, 4.12}, {120, 0.57, 29642, 3536, 6.98}, {120, 1.0, 34371, 3123, 9.02},
  };
  std::vector<ResourceRecord> out;
  for (const auto& r : rows) out.push_back({"qiskit-t", r.n, r.d, 0, r.n_g, r.depth, r.depth, r.t});
  return out;
}

std::vector<double> baseline_densities(const std::vector<ResourceRecord>& baseline, int n_q) {
  std::vector<double> out;
  for (const auto& r : baseline) {
    if (r.n_q == n_q) out.push_back(r.e_d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double crossover_density(const std::vector<double>& grid, const std::vector<double>& method_n_g,
                         const std::vector<double>& baseline_n_g) {
  if (grid.empty() || grid.size() != method_n_g.size() || grid.size() != baseline_n_g.size()) {
    throw std::invalid_argument("crossover needs equally sized, non-empty grids");
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double diff = method_n_g[k] - baseline_n_g[k];
    if (diff >= 0.0) continue;
    if (k == 0) return grid[0];
    const double prev = method_n_g[k - 1] - baseline_n_g[k - 1];
    const double frac = prev / (prev - diff);
    return grid[k - 1] + frac * (grid[k] - grid[k - 1]);
  }
  return 1.0;
}

std::vector<CrossoverRecord> crossover_map(const std::vector<int>& n_q_list,
                                           const std::vector<double>& density_grid,
                                           const std::vector<ResourceRecord>& baseline,
                                           const std::string& method,
                                           const std::vector<std::uint64_t>& seeds,
                                           const AnnealConfig& cfg, int jobs) {
  if (seeds.empty()) throw std::invalid_argument("crossover needs at least one seed");
  std::vector<CrossoverRecord> out;
  for (int n : n_q_list) {
    std::vector<double> grid = density_grid.empty() ? baseline_densities(baseline, n) : density_grid;
    std::sort(grid.begin(), grid.end());
    if (grid.empty()) throw CoverageError(fmt::format("baseline has no records for n_q = {}", n));
    std::vector<double> base;
    for (double d : grid) {
      double sum = 0.0;
      int count = 0;
      for (const auto& r : baseline) {
        if (r.n_q == n && std::abs(r.e_d - d) < 1e-9) {
          sum += static_cast<double>(r.n_g);
          ++count;
        }
      }
      if (count == 0) throw CoverageError(fmt::format("baseline misses n_q = {}, e_d = {}", n, d));
      base.push_back(sum / count);
    }
    const auto records = density_sweep(n, grid, {method}, seeds, cfg, jobs);
    CrossoverRecord rec;
    rec.method = method;
    rec.n_q = n;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      std::vector<double> ng;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        ng.push_back(static_cast<double>(records[k * seeds.size() + s].n_g));
      }
      rec.thresholds.push_back(crossover_density(grid, ng, base));
    }
    double mean = 0.0;
    for (double t : rec.thresholds) mean += t;
    mean /= static_cast<double>(rec.thresholds.size());
    double var = 0.0;
    for (double t : rec.thresholds) var += (t - mean) * (t - mean);
    rec.threshold_mean = mean;
    rec.threshold_std = std::sqrt(var / static_cast<double>(rec.thresholds.size()));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace chainq
