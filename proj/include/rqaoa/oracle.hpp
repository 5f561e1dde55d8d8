// Copyright 2026 The rqaoa-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "rqaoa/analytic.hpp"
#include "rqaoa/graph.hpp"

namespace rqaoa {

inline constexpr int kMaxBruteForceVertices = 24;
inline constexpr int kMaxStatevectorQubits = 20;

class OversizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct CutSolution {
  double value = 0.0;
  std::vector<int> assignment;  // entries in {-1, +1}
};

namespace detail {

// Bit i set <=> x_i = -1. Assignments compare lexicographically from x_0 with
// +1 ordered before -1, so `a` < `b` iff the lowest differing bit is clear in `a`.
inline bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

inline std::vector<int> bits_to_assignment(std::uint32_t bits, int n) {
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = (bits >> i) & 1u ? -1 : 1;
  return x;
}

}  // namespace detail

/// Exact weighted MAX-CUT by Gray-code enumeration of the 2^(n-1) assignments
/// with x_0 = +1. Among optimal assignments the lexicographically smallest
/// (with +1 < -1) is returned, so vertices without edges stay at +1.
inline CutSolution brute_force_maxcut(const WeightedGraph& g) {
  const int n = g.n_vertices();
  if (n > kMaxBruteForceVertices)
    throw OversizeError("brute force limited to " + std::to_string(kMaxBruteForceVertices) +
                        " vertices, got " + std::to_string(n));
  if (n <= 1) return {0.0, std::vector<int>(static_cast<std::size_t>(n), 1)};

  std::vector<int> x(static_cast<std::size_t>(n), 1);
  std::uint32_t bits = 0;
  double value = 0.0;
  double best = 0.0;
  std::uint32_t best_bits = 0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < count; ++step) {
    // Gray code flips bit ctz(step) of the free variables x_1..x_{n-1}.
    const int v = std::countr_zero(step) + 1;
    double delta = 0.0;
    for (const auto& nb : g.neighbors(v)) delta += nb.w * x[v] * x[nb.vertex];
    x[v] = -x[v];
    bits ^= 1u << v;
    value += delta;
    if (value > best || (value == best && detail::lex_less(bits, best_bits))) {
      best = value;
      best_bits = bits;
    }
  }
  auto assignment = detail::bits_to_assignment(best_bits, n);
  // Report the value recomputed from scratch rather than the running sum.
  return {cut_value(g, assignment), std::move(assignment)};
}

/// Known optimum of a parity-signed graph: cut exactly along the parity
/// classes, collecting every positive weight.
inline CutSolution parity_signed_optimum(const ParitySignedGraph& pg) {
  double value = 0.0;
  for (const auto& e : pg.graph().edges())
    if (e.w > 0) value += e.w;
  std::vector<int> x(pg.sigma().size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = pg.sigma()[i] == 0 ? 1 : -1;
  return {value, std::move(x)};
}

struct StatevectorResult {
  double cut_expectation = 0.0;
  std::vector<double> edge_zz;  // graph edge order
  double norm = 0.0;
  std::vector<std::complex<double>> amplitudes;
};

/// Dense simulation of exp(-i b sum X) exp(-i g H_C) |+>^n. Qubit v is bit v
/// of the basis index, with bit 0 <=> Z eigenvalue +1.
inline StatevectorResult statevector_qaoa1(const WeightedGraph& g, ParamPoint p,
                                           bool keep_amplitudes = false) {
  const int n = g.n_vertices();
  if (n > kMaxStatevectorQubits)
    throw OversizeError("statevector limited to " + std::to_string(kMaxStatevectorQubits) +
                        " qubits, got " + std::to_string(n));
  const std::size_t dim = std::size_t{1} << n;
  const double amp0 = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<std::complex<double>> psi(dim);

  for (std::size_t z = 0; z < dim; ++z) {
    double cost = 0.0;
    for (const auto& e : g.edges())
      if (((z >> e.u) ^ (z >> e.v)) & 1u) cost += e.w;
    psi[z] = std::polar(amp0, -p.gamma * cost);
  }

  const double c = std::cos(p.beta);
  const std::complex<double> ms(0.0, -std::sin(p.beta));
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < dim; ++z) {
      if (z & bit) continue;
      const auto a0 = psi[z], a1 = psi[z | bit];
      psi[z] = c * a0 + ms * a1;
      psi[z | bit] = ms * a0 + c * a1;
    }
  }

  StatevectorResult r;
  r.edge_zz.assign(g.n_edges(), 0.0);
  for (std::size_t z = 0; z < dim; ++z) {
    const double prob = std::norm(psi[z]);
    r.norm += prob;
    const auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const bool differ = ((z >> edges[e].u) ^ (z >> edges[e].v)) & 1u;
      r.edge_zz[e] += differ ? -prob : prob;
    }
  }
  r.norm = std::sqrt(r.norm);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    r.cut_expectation += 0.5 * edges[e].w * (1.0 - r.edge_zz[e]);
  if (keep_amplitudes) r.amplitudes = std::move(psi);
  return r;
}

/// Best cut among `shots` computational-basis samples of the level-1 state.
inline CutSolution sample_best_cut(const WeightedGraph& g, ParamPoint p, int shots,
                                   std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be positive");
  auto sv = statevector_qaoa1(g, p, true);
  std::vector<double> cdf(sv.amplitudes.size());
  double acc = 0.0;
  for (std::size_t z = 0; z < cdf.size(); ++z) cdf[z] = acc += std::norm(sv.amplitudes[z]);
  std::mt19937_64 rng(seed);
  CutSolution best{-std::numeric_limits<double>::infinity(), {}};
  for (int s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto z = static_cast<std::uint32_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (z >= cdf.size()) z = static_cast<std::uint32_t>(cdf.size() - 1);
    auto x = detail::bits_to_assignment(z, g.n_vertices());
    const double v = cut_value(g, x);
    if (v > best.value) best = {v, std::move(x)};
  }
  return best;
}

}  // namespace rqaoa
