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

#include "chainq/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "chainq/errors.hpp"
#include "json.hpp"

namespace chainq {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major

Mat2 single_qubit_matrix(const Gate& g) {
  const Complex i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return {s, s, s, -s};
    }
    case GateKind::RZ:
      return {std::exp(-i * (g.theta / 2)), 0.0, 0.0, std::exp(i * (g.theta / 2))};
    case GateKind::RX: {
      const double c = std::cos(g.theta / 2);
      const double s = std::sin(g.theta / 2);
      return {c, -i * s, -i * s, c};
    }
    default:
      throw std::logic_error(fmt::format("{} is not a single-qubit gate", gate_name(g.kind)));
  }
}

// Applies m to qubit q of each length-dim vector laid out with `stride`.
void apply_1q(Complex* data, std::size_t dim, std::size_t stride, int q, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t k = 0; k < dim; ++k) {
    if (k & bit) continue;
    Complex& a = data[k * stride];
    Complex& b = data[(k | bit) * stride];
    const Complex x = a;
    const Complex y = b;
    a = m[0] * x + m[1] * y;
    b = m[2] * x + m[3] * y;
  }
}

void apply_cnot(Complex* data, std::size_t dim, std::size_t stride, int control, int target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t k = 0; k < dim; ++k) {
    if ((k & cb) && !(k & tb)) std::swap(data[k * stride], data[(k | tb) * stride]);
  }
}

Mat2 conj(const Mat2& m) { return {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])}; }

void check_width(const Circuit& c, int cap, const char* what) {
  if (c.width > cap || c.width > 62) {
    throw SizeLimitError(fmt::format("{} simulation of {} qubits exceeds the cap of {}", what,
                                     c.width, cap));
  }
}

}  // namespace

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(amplitudes[k]);
  return p;
}

Complex DensityMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t k = 0; k < dim(); ++k) t += at(k, k);
  return t;
}

double DensityMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = r; c < dim(); ++c) worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
  }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::vector<double> DensityMatrix::probabilities() const {
  std::vector<double> p(dim());
  for (std::size_t k = 0; k < dim(); ++k) p[k] = at(k, k).real();
  return p;
}

void NoiseSpec::validate() const {
  if (!(eps_2q >= 0.0 && eps_2q <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
}

StateVector simulate_ideal(const Circuit& c, int cap) {
  check_width(c, cap, "state-vector");
  const Circuit d = decompose(c);
  StateVector s;
  s.width = c.width;
  const std::size_t dim = std::size_t{1} << c.width;
  s.amplitudes.assign(dim, 0.0);
  s.amplitudes[0] = 1.0;
  for (const auto& g : d.gates) {
    if (g.kind == GateKind::CNOT) {
      apply_cnot(s.amplitudes.data(), dim, 1, g.q0, g.q1);
    } else {
      apply_1q(s.amplitudes.data(), dim, 1, g.q0, single_qubit_matrix(g));
    }
  }
  return s;
}

DensityMatrix simulate_noisy(const Circuit& c, const NoiseSpec& noise, int cap) {
  noise.validate();
  check_width(c, cap, "density-matrix");
  const Circuit d = decompose(c);
  DensityMatrix rho;
  rho.width = c.width;
  const std::size_t dim = rho.dim();
  rho.rho.assign(dim * dim, 0.0);
  rho.rho[0] = 1.0;
  Complex* data = rho.rho.data();
  const double eps = noise.eps_2q;

  for (const auto& g : d.gates) {
    if (g.kind == GateKind::CNOT) {
      // CNOT is a real permutation: U rho U^dagger permutes rows and columns.
      for (std::size_t col = 0; col < dim; ++col) apply_cnot(data + col, dim, dim, g.q0, g.q1);
      for (std::size_t row = 0; row < dim; ++row) apply_cnot(data + row * dim, dim, 1, g.q0, g.q1);
      if (eps == 0.0) continue;
      const std::size_t bi = std::size_t{1} << g.q0;
      const std::size_t bj = std::size_t{1} << g.q1;
      const std::array<std::size_t, 4> offs = {0, bi, bj, bi | bj};
      for (std::size_t r = 0; r < dim; ++r) {
        if (r & (bi | bj)) continue;
        for (std::size_t col = 0; col < dim; ++col) {
          if (col & (bi | bj)) continue;
          Complex tr = 0.0;
          for (std::size_t a : offs) tr += data[(r | a) * dim + (col | a)];
          for (std::size_t a : offs) {
            for (std::size_t b : offs) {
              Complex& e = data[(r | a) * dim + (col | b)];
              e *= (1.0 - eps);
              if (a == b) e += eps / 4.0 * tr;
            }
          }
        }
      }
    } else {
      const Mat2 m = single_qubit_matrix(g);
      const Mat2 mc = conj(m);
      for (std::size_t col = 0; col < dim; ++col) apply_1q(data + col, dim, dim, g.q0, m);
      for (std::size_t row = 0; row < dim; ++row) apply_1q(data + row * dim, dim, 1, g.q0, mc);
    }
  }
  return rho;
}

Distribution logical_distribution(const std::vector<double>& physical, const ParityDecoder& decoder) {
  if (physical.size() != (std::size_t{1} << decoder.n())) {
    throw std::invalid_argument("distribution size does not match the decoder width");
  }
  Distribution out(physical.size(), 0.0);
  for (std::size_t k = 0; k < physical.size(); ++k) out[decoder.decode_index(k)] += physical[k];
  return out;
}

double success_probability(const Distribution& dist, const CutSolution& opt) {
  const std::uint64_t x = bits_to_index(opt.bits);
  const std::uint64_t y = bits_to_index(complement(opt.bits));
  if (x >= dist.size() || y >= dist.size()) {
    throw std::invalid_argument("optimum does not fit the distribution");
  }
  return dist[x] + dist[y];
}

double approximation_ratio(const Distribution& dist, const WeightedGraph& g, const CutSolution& opt) {
  if (opt.cost == 0.0) throw UndefinedMetric("approximation ratio needs a nonzero optimum");
  if (dist.size() != (std::size_t{1} << g.n())) {
    throw std::invalid_argument("distribution size does not match the graph");
  }
  double e = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k] != 0.0) e += dist[k] * cut_cost(g, index_to_bits(k, g.n()));
  }
  return e / opt.cost;
}

double approximation_ratio(const std::vector<Bits>& samples, const WeightedGraph& g,
                           const CutSolution& opt) {
  if (opt.cost == 0.0) throw UndefinedMetric("approximation ratio needs a nonzero optimum");
  if (samples.empty()) throw UndefinedMetric("approximation ratio needs at least one sample");
  double s = 0.0;
  for (const auto& x : samples) s += cut_cost(g, x);
  return s / static_cast<double>(samples.size()) / opt.cost;
}

std::vector<Bits> sample(const Distribution& dist, int n, std::size_t shots, std::uint64_t seed) {
  if (dist.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("distribution size does not match the width");
  }
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(dist.begin(), dist.end());
  std::vector<Bits> out;
  out.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) out.push_back(index_to_bits(pick(rng), n));
  return out;
}

std::vector<Bits> sample(const StateVector& state, const ParityDecoder& decoder, std::size_t shots,
                         std::uint64_t seed) {
  return sample(logical_distribution(state.probabilities(), decoder), state.width, shots, seed);
}

double total_variation(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distributions differ in size");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
  return 0.5 * s;
}

std::string distribution_to_csv(const Distribution& dist, int n, double threshold) {
  std::string out = "bitstring,probability\n";
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k] <= threshold) continue;
    out += fmt::format("{},{:.17g}\n", bits_to_string(index_to_bits(k, n)), dist[k]);
  }
  return out;
}

std::string metrics_to_json(const Metrics& m) {
  nlohmann::ordered_json j;
  j["p_gs"] = m.p_gs;
  j["r"] = m.r;
  j["n_g"] = m.n_g;
  j["depth_2q"] = m.depth_2q;
  j["depth_all"] = m.depth_all;
  return j.dump(2) + "\n";
}

}  // namespace chainq
