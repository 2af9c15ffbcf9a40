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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "chainq/annealer.hpp"
#include "chainq/bench.hpp"
#include "chainq/circuit.hpp"
#include "chainq/errors.hpp"
#include "chainq/graph.hpp"
#include "chainq/lr_qaoa.hpp"
#include "chainq/ptc_encoder.hpp"
#include "chainq/simulator.hpp"
#include "chainq/swap_encoder.hpp"

namespace {

using namespace chainq;

// Relative default file names land in $CHAINQ_OUTPUT_DIR when it is set;
// without it, results go to standard output.
std::string resolve_output(const std::string& given, const std::string& default_name) {
  if (!given.empty()) return given;
  if (const char* dir = std::getenv("CHAINQ_OUTPUT_DIR"); dir && *dir) {
    return (std::filesystem::path(dir) / default_name).string();
  }
  return "-";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed to write '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct InstanceArgs {
  std::string path;
  int n = 8;
  double density = 1.0;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--instance", path, "Instance JSON (overrides --n/--density/--seed)");
    cmd->add_option("--n", n, "Number of qubits for a generated instance")->capture_default_str()
        ->check(CLI::Range(1, 100000));
    cmd->add_option("--density", density, "Edge density of a generated instance")
        ->capture_default_str()->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", seed, "Seed for instance generation and sampling")->capture_default_str();
  }

  WeightedGraph load() const {
    if (!path.empty()) return graph_from_json(read_file(path));
    return random_instance(n, density, seed);
  }
};

struct AnnealArgs {
  AnnealConfig cfg;

  void attach(CLI::App* cmd) {
    cmd->add_option("--t0", cfg.t0, "Initial annealing temperature")->capture_default_str();
    cmd->add_option("--ts", cfg.ts, "Stopping temperature")->capture_default_str();
    cmd->add_option("--cooling", cfg.cooling, "Cooling rate per iteration")->capture_default_str();
    cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap")->capture_default_str();
  }
};

std::string order_to_string(const Order& order) {
  std::string s;
  for (int v : order) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

Order choose_order(const WeightedGraph& g, Encoder enc, bool sa, const AnnealConfig& cfg,
                   std::uint64_t seed) {
  if (!sa || g.n() < 2) return identity_order(g.n());
  AnnealConfig run = cfg;
  run.seed = seed;
  return optimize_order(g, enc, run, false).best_order;
}

Bits parse_shot(const std::string& text, int n, std::size_t lineno) {
  if (static_cast<int>(text.size()) != n) {
    throw ParseError(fmt::format("shot has {} bits, expected {}", text.size(), n), lineno);
  }
  try {
    return bits_from_string(text);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), lineno);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transpile, anneal, simulate and benchmark QAOA cost layers on a qubit chain"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // generate
  auto* gen = app.add_subcommand("generate", "Write a random weighted MaxCut instance as JSON");
  InstanceArgs gen_inst;
  gen->add_option("--n", gen_inst.n, "Number of vertices")->capture_default_str()->check(CLI::Range(1, 100000));
  gen->add_option("--density", gen_inst.density, "Edge density")->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_inst.seed, "Generator seed")->capture_default_str();
  std::string gen_out;
  gen->add_option("-o,--out", gen_out, "Output path (default: stdout)");

  // transpile
  auto* tr = app.add_subcommand("transpile", "Encode one cost layer and report its resources");
  InstanceArgs tr_inst;
  tr_inst.attach(tr);
  std::string tr_encoder = "ptc";
  tr->add_option("--encoder", tr_encoder, "ptc, swap or fc")->capture_default_str()
      ->check(CLI::IsMember({"ptc", "swap", "fc"}));
  bool tr_sa = false;
  tr->add_flag("--sa,!--no-sa", tr_sa, "Anneal the initial order (implies --truncate)");
  bool tr_truncate = false;
  tr->add_flag("--truncate", tr_truncate, "Drop the unneeded tail of the sweep");
  AnnealArgs tr_anneal;
  tr_anneal.attach(tr);
  double tr_gamma = 1.0;
  tr->add_option("--gamma", tr_gamma, "Cost angle used in the dumped circuit")->capture_default_str();
  std::string tr_circuit_out, tr_metrics_out;
  tr->add_option("--circuit-out", tr_circuit_out, "Circuit dump path");
  tr->add_option("--metrics-out", tr_metrics_out, "Metrics JSON path (default: stdout)");

  // anneal
  auto* an = app.add_subcommand("anneal", "Anneal the initial qubit order and write the trace");
  InstanceArgs an_inst;
  an_inst.attach(an);
  std::string an_encoder = "ptc";
  an->add_option("--encoder", an_encoder, "ptc or swap")->capture_default_str()
      ->check(CLI::IsMember({"ptc", "swap"}));
  AnnealArgs an_anneal;
  an_anneal.attach(an);
  std::string an_out;
  an->add_option("-o,--out", an_out, "Trace CSV path (default: stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Simulate linear-ramp QAOA and report p_gs and r");
  InstanceArgs sim_inst;
  sim_inst.attach(sim);
  std::string sim_encoder = "ptc";
  sim->add_option("--encoder", sim_encoder, "ptc, swap or fc")->capture_default_str()
      ->check(CLI::IsMember({"ptc", "swap", "fc"}));
  int sim_p = 1;
  sim->add_option("--p", sim_p, "Number of QAOA layers")->capture_default_str()->check(CLI::PositiveNumber);
  double sim_db = -1.0, sim_dg = -1.0;
  sim->add_option("--delta-beta", sim_db, "Mixer ramp (default 0.63 for n <= 15, else 0.3)");
  sim->add_option("--delta-gamma", sim_dg, "Cost ramp (default 0.63 for n <= 15, else 0.3)");
  double sim_eps = 0.0;
  sim->add_option("--eps", sim_eps, "Two-qubit depolarizing error per CNOT")->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  std::size_t sim_shots = 0;
  sim->add_option("--shots", sim_shots, "Samples to draw (0: exact distribution only)")->capture_default_str();
  bool sim_sa = false, sim_truncate = false;
  sim->add_flag("--sa,!--no-sa", sim_sa, "Anneal the initial order (implies --truncate)");
  sim->add_flag("--truncate", sim_truncate, "Truncate the encoded layers");
  AnnealArgs sim_anneal;
  sim_anneal.attach(sim);
  std::string sim_dist_out, sim_metrics_out, sim_samples_out;
  sim->add_option("--dist-out", sim_dist_out, "Distribution CSV path");
  sim->add_option("--metrics-out", sim_metrics_out, "Metrics JSON path (default: stdout)");
  sim->add_option("--samples-out", sim_samples_out, "Sampled bit strings, one per line");

  // sweep
  auto* sw = app.add_subcommand("sweep", "Resource sweep over densities, methods and seeds");
  int sw_n = 20;
  sw->add_option("--n", sw_n, "Number of qubits")->capture_default_str()->check(CLI::Range(2, 100000));
  std::vector<double> sw_densities = {0.211, 0.298, 0.386, 0.649, 1.0};
  sw->add_option("--densities", sw_densities, "Edge densities")->capture_default_str()->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  std::vector<std::string> sw_methods = bench_methods();
  sw->add_option("--methods", sw_methods, "Methods")->capture_default_str()->delimiter(',')
      ->check(CLI::IsMember(bench_methods()));
  std::vector<std::uint64_t> sw_seeds = {0, 1, 2};
  sw->add_option("--seeds", sw_seeds, "Instance and annealing seeds")->capture_default_str()->delimiter(',');
  AnnealArgs sw_anneal;
  sw_anneal.attach(sw);
  int jobs = 1;
  std::string sw_out;
  sw->add_option("-o,--out", sw_out, "results.csv path (default: stdout)");
  sw->add_option("--jobs", jobs, "Parallel sweep cells")->capture_default_str()->check(CLI::PositiveNumber);

  // noise-sweep
  auto* ns = app.add_subcommand("noise-sweep", "p_gs and r versus depolarizing error");
  InstanceArgs ns_inst;
  ns_inst.n = 6;
  ns_inst.seed = 1;
  ns_inst.attach(ns);
  int ns_p = 20;
  ns->add_option("--p", ns_p, "Number of QAOA layers")->capture_default_str()->check(CLI::PositiveNumber);
  double ns_db = -1.0, ns_dg = -1.0;
  ns->add_option("--delta-beta", ns_db, "Mixer ramp (default 0.63 for n <= 15, else 0.3)");
  ns->add_option("--delta-gamma", ns_dg, "Cost ramp (default 0.63 for n <= 15, else 0.3)");
  std::vector<double> ns_eps = {0, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2, 1e-1};
  ns->add_option("--eps", ns_eps, "Error grid")->capture_default_str()->delimiter(',')->check(CLI::Range(0.0, 1.0));
  std::string ns_out;
  ns->add_option("-o,--out", ns_out, "noise.csv path (default: stdout)");
  ns->add_option("--jobs", jobs, "Parallel grid points")->capture_default_str()->check(CLI::PositiveNumber);

  // crossover
  auto* co = app.add_subcommand("crossover", "Density where an encoding beats a baseline");
  std::vector<int> co_n = {20, 60, 120};
  co->add_option("--n", co_n, "Qubit counts")->capture_default_str()->delimiter(',')->check(CLI::Range(2, 100000));
  std::string co_baseline;
  co->add_option("--baseline", co_baseline, "Baseline results.csv (default: built-in Qiskit-T table)");
  std::string co_baseline_method = "qiskit-t";
  co->add_option("--baseline-method", co_baseline_method, "Method name to read from the baseline")
      ->capture_default_str();
  std::string co_method = "ptc+sa";
  co->add_option("--method", co_method, "ptc+sa or swap+sa")->capture_default_str()
      ->check(CLI::IsMember({"ptc", "ptc+sa", "swap", "swap+sa"}));
  std::vector<std::uint64_t> co_seeds = {0, 1, 2};
  co->add_option("--seeds", co_seeds, "Seeds")->capture_default_str()->delimiter(',');
  AnnealArgs co_anneal;
  co_anneal.attach(co);
  std::string co_out;
  co->add_option("-o,--out", co_out, "Crossover CSV path (default: stdout)");
  co->add_option("--jobs", jobs, "Parallel sweep cells")->capture_default_str()->check(CLI::PositiveNumber);

  // decode
  auto* de = app.add_subcommand("decode", "Map measured physical shots to logical bit strings");
  std::string de_circuit, de_shots, de_out;
  de->add_option("--circuit", de_circuit, "Circuit dump carrying the measurement labels")->required();
  de->add_option("--shots", de_shots, "Raw shots, one physical bit string per line")->required();
  de->add_option("-o,--out", de_out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      write_output(resolve_output(gen_out, "instance.json"),
                   graph_to_json(random_instance(gen_inst.n, gen_inst.density, gen_inst.seed)));
    } else if (*tr) {
      const WeightedGraph g = tr_inst.load();
      nlohmann::ordered_json j;
      j["method"] = tr_encoder + (tr_sa && tr_encoder != "fc" ? "+sa" : "");
      j["n_q"] = g.n();
      j["e_d"] = g.n() > 1 ? edge_density(g) : 0.0;
      Circuit c;
      if (tr_encoder == "fc") {
        c = Circuit(g.n(), false);
        for (const auto& e : g.edges()) c.add(Gate::rzz(e.u, e.v, 2.0 * tr_gamma * e.w));
        j["n_g"] = native_two_qubit_count(c);
        j["depth_2q"] = native_depth(c, DepthConvention::TwoQubitOnly);
        j["depth_all"] = native_depth(c, DepthConvention::AllGates);
      } else {
        tr_anneal.cfg.validate();
        const Encoder enc = parse_encoder(tr_encoder);
        const Order order = choose_order(g, enc, tr_sa, tr_anneal.cfg, tr_inst.seed);
        const bool truncate = tr_truncate || tr_sa;
        c = enc == Encoder::Ptc ? encode_ptc(g, order, tr_gamma, truncate).circuit
                                : encode_swap(g, order, tr_gamma, truncate);
        j["n_g"] = two_qubit_count(c);
        j["depth_2q"] = depth(c, DepthConvention::TwoQubitOnly);
        j["depth_all"] = depth(c, DepthConvention::AllGates);
        j["order"] = order;
      }
      if (!tr_circuit_out.empty()) write_output(tr_circuit_out, dump_circuit(c));
      write_output(resolve_output(tr_metrics_out, "metrics.json"), j.dump(2) + "\n");
    } else if (*an) {
      const WeightedGraph g = an_inst.load();
      AnnealConfig cfg = an_anneal.cfg;
      cfg.seed = an_inst.seed;
      const AnnealTrace trace = optimize_order(g, parse_encoder(an_encoder), cfg);
      write_output(resolve_output(an_out, "trace.csv"), trace_to_csv(trace));
      spdlog::info("best cost {} (initial {}), order: {}", trace.best_cost, trace.initial_cost,
                   order_to_string(trace.best_order));
    } else if (*sim) {
      const WeightedGraph g = sim_inst.load();
      const double db = sim_db >= 0.0 ? sim_db : default_delta(g.n());
      const double dg = sim_dg >= 0.0 ? sim_dg : default_delta(g.n());
      const Target target = parse_target(sim_encoder);
      Order order = identity_order(g.n());
      if (target != Target::IdealFc) {
        sim_anneal.cfg.validate();
        order = choose_order(g, parse_encoder(sim_encoder), sim_sa, sim_anneal.cfg, sim_inst.seed);
      }
      const QaoaCircuit q = build_qaoa(g, target, order, ramp(sim_p, db, dg), sim_truncate || sim_sa);
      std::vector<double> physical;
      if (sim_eps > 0.0) {
        physical = simulate_noisy(q.circuit, NoiseSpec{sim_eps}).probabilities();
      } else {
        physical = simulate_ideal(q.circuit).probabilities();
      }
      const Distribution dist = logical_distribution(physical, q.decoder);
      const CutSolution opt = brute_force_optimum(g);
      Metrics m;
      m.p_gs = success_probability(dist, opt);
      m.r = approximation_ratio(dist, g, opt);
      if (target == Target::IdealFc) {
        m.n_g = native_two_qubit_count(q.circuit);
        m.depth_2q = native_depth(q.circuit, DepthConvention::TwoQubitOnly);
        m.depth_all = native_depth(q.circuit, DepthConvention::AllGates);
      } else {
        m.n_g = two_qubit_count(q.circuit);
        m.depth_2q = depth(q.circuit, DepthConvention::TwoQubitOnly);
        m.depth_all = depth(q.circuit, DepthConvention::AllGates);
      }
      if (!sim_dist_out.empty()) write_output(sim_dist_out, distribution_to_csv(dist, g.n()));
      if (sim_shots > 0) {
        std::string lines;
        for (const auto& x : sample(dist, g.n(), sim_shots, sim_inst.seed)) lines += bits_to_string(x) + "\n";
        write_output(resolve_output(sim_samples_out, "samples.txt"), lines);
      }
      write_output(resolve_output(sim_metrics_out, "metrics.json"), metrics_to_json(m));
    } else if (*sw) {
      const auto records = density_sweep(sw_n, sw_densities, sw_methods, sw_seeds, sw_anneal.cfg, jobs);
      write_output(resolve_output(sw_out, "results.csv"), results_to_csv(records));
    } else if (*ns) {
      const WeightedGraph g = ns_inst.load();
      const double db = ns_db >= 0.0 ? ns_db : default_delta(g.n());
      const double dg = ns_dg >= 0.0 ? ns_dg : default_delta(g.n());
      write_output(resolve_output(ns_out, "noise.csv"), noise_to_csv(noise_sweep(g, ns_p, db, dg, ns_eps, jobs)));
    } else if (*co) {
      std::vector<ResourceRecord> baseline;
      for (const auto& r : co_baseline.empty() ? table1_qiskit_baseline() : import_baseline(co_baseline)) {
        if (r.method == co_baseline_method) baseline.push_back(r);
      }
      const auto rows = crossover_map(co_n, {}, baseline, co_method, co_seeds, co_anneal.cfg, jobs);
      write_output(resolve_output(co_out, "crossover.csv"), crossover_to_csv(rows));
    } else if (*de) {
      const Circuit c = parse_circuit(read_file(de_circuit));
      const ParityDecoder d = decoder_for(c);
      std::istringstream in(read_file(de_shots));
      std::string line, out;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out += bits_to_string(d.decode(parse_shot(line, c.width, lineno))) + "\n";
      }
      write_output(resolve_output(de_out, "decoded.txt"), out);
    }
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
