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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chainq/annealer.hpp"
#include "chainq/bench.hpp"
#include "chainq/errors.hpp"
#include "chainq/graph.hpp"
#include "chainq/lr_qaoa.hpp"
#include "chainq/simulator.hpp"

namespace py = pybind11;
using namespace chainq;

namespace {

// Logical output distribution of an ideal or noisy run, indexed by the
// little-endian logical bit string.
Distribution run_distribution(const QaoaCircuit& q, double eps) {
  if (eps == 0.0) return logical_distribution(simulate_ideal(q.circuit).probabilities(), q.decoder);
  return logical_distribution(simulate_noisy(q.circuit, NoiseSpec{eps}).probabilities(), q.decoder);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chain-local QAOA encodings, order annealing and simulation";

  py::class_<Edge>(m, "Edge")
      .def_readonly("u", &Edge::u)
      .def_readonly("v", &Edge::v)
      .def_readonly("w", &Edge::w);

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
             return WeightedGraph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &WeightedGraph::n)
      .def_property_readonly("edges", &WeightedGraph::edges)
      .def_property_readonly("density", [](const WeightedGraph& g) { return edge_density(g); })
      .def("to_json", [](const WeightedGraph& g) { return graph_to_json(g); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(s); });

  m.def("random_instance", &random_instance, py::arg("n"), py::arg("density"), py::arg("seed"));
  m.def("complete_graph", &complete_graph, py::arg("n"), py::arg("w") = 1.0);
  m.def("max_cut", [](const WeightedGraph& g) {
    const CutSolution s = brute_force_optimum(g);
    return py::make_tuple(bits_to_string(s.bits), s.cost);
  });

  m.def("encoding_cost",
        [](const WeightedGraph& g, const std::vector<int>& order, const std::string& encoder) {
          return encoding_cost(g, order, parse_encoder(encoder));
        },
        py::arg("graph"), py::arg("order"), py::arg("encoder"));

  m.def("anneal",
        [](const WeightedGraph& g, const std::string& encoder, std::uint64_t seed, int max_iter) {
          AnnealConfig cfg;
          cfg.seed = seed;
          cfg.max_iter = max_iter;
          const AnnealTrace t = optimize_order(g, parse_encoder(encoder), cfg, false);
          return py::make_tuple(t.best_order, t.initial_cost, t.best_cost);
        },
        py::arg("graph"), py::arg("encoder"), py::arg("seed") = 0, py::arg("max_iter") = 50000,
        "Anneal the qubit order; returns (best_order, initial_cost, best_cost).");

  m.def("transpile",
        [](const std::string& method, int n, double density, std::uint64_t seed) {
          const ResourceRecord r = transpile_record(method, n, density, seed, AnnealConfig{});
          py::dict d;
          d["method"] = r.method;
          d["n_g"] = r.n_g;
          d["depth_2q"] = r.depth_2q;
          d["depth_all"] = r.depth_all;
          return d;
        },
        py::arg("method"), py::arg("n"), py::arg("density"), py::arg("seed") = 0);

  m.def("qaoa_distribution",
        [](const WeightedGraph& g, const std::string& target, int p, double eps, bool truncate) {
          const double delta = default_delta(g.n());
          const QaoaCircuit q =
              build_qaoa(g, parse_target(target), identity_order(g.n()), ramp(p, delta, delta), truncate);
          return run_distribution(q, eps);
        },
        py::arg("graph"), py::arg("target"), py::arg("p"), py::arg("eps") = 0.0, py::arg("truncate") = false,
        "Logical output distribution of linear-ramp QAOA on one target.");

  m.def("success_probability", [](const WeightedGraph& g, const Distribution& dist) {
    return success_probability(dist, brute_force_optimum(g));
  });
  m.def("total_variation", &total_variation);

  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception<InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);
}
