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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rqaoa {

using Vertex = int;

/// Undirected weighted edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Ordered endpoint pair used to name an edge independent of its weight.
struct EdgeKey {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  double w = 0.0;
  std::size_t edge = 0;  // index into WeightedGraph::edges()
};

/// Immutable simple graph with nonzero real edge weights.
///
/// Edges are normalized to u < v and kept sorted lexicographically; adjacency
/// lists are sorted by neighbor id. Construction validates every invariant
/// (ids in range, no self-loops, no duplicate pairs, no zero weights) and
/// throws std::invalid_argument on violation.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(int n_vertices, std::vector<Edge> edges)
      : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
      if (e.u == e.v)
        throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.w == 0.0 || !std::isfinite(e.w))
        throw std::invalid_argument("edge weight must be finite and nonzero");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) +
                                    "," + std::to_string(edges_[i].v) + ")");
    }
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      adjacency_[e.u].push_back({e.v, e.w, i});
      adjacency_[e.v].push_back({e.u, e.w, i});
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
  }

  int n_vertices() const { return n_; }
  std::size_t n_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  std::optional<std::size_t> find_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                               [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                                 return std::pair(e.u, e.v) < key;
                               });
    if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  std::optional<double> weight(Vertex a, Vertex b) const {
    if (auto i = find_edge(a, b)) return edges_[*i].w;
    return std::nullopt;
  }

  double total_weight() const {
    double s = 0.0;
    for (const auto& e : edges_) s += e.w;
    return s;
  }

  double max_abs_weight() const {
    double m = 0.0;
    for (const auto& e : edges_) m = std::max(m, std::abs(e.w));
    return m;
  }

  bool unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Weighted cut value C(x) = 1/2 * sum_e w_e (1 - x_u x_v) for x in {-1,+1}^n.
inline double cut_value(const WeightedGraph& g, std::span<const int> x) {
  if (static_cast<int>(x.size()) != g.n_vertices())
    throw std::invalid_argument("assignment length does not match vertex count");
  double c = 0.0;
  for (const auto& e : g.edges()) c += 0.5 * e.w * (1.0 - x[e.u] * x[e.v]);
  return c;
}

/// Degree -> number of vertices with that degree.
using DegreeHistogram = std::map<int, std::size_t>;

inline DegreeHistogram degree_histogram(const WeightedGraph& g) {
  DegreeHistogram h;
  for (Vertex v = 0; v < g.n_vertices(); ++v) ++h[g.degree(v)];
  return h;
}

/// Graph whose vertices carry a parity bit: edges across the two parity
/// classes have positive weight, edges within a class negative weight.
class ParitySignedGraph {
 public:
  ParitySignedGraph(WeightedGraph graph, std::vector<std::uint8_t> sigma)
      : graph_(std::move(graph)), sigma_(std::move(sigma)) {
    if (auto bad = first_violation(graph_, sigma_))
      throw std::invalid_argument("parity-signed invariant violated: " + *bad);
  }

  const WeightedGraph& graph() const { return graph_; }
  std::span<const std::uint8_t> sigma() const { return sigma_; }
  int parity(Vertex v) const { return sigma_.at(v); }

  /// Empty when the sign rule holds; otherwise a description of the first violation.
  static std::optional<std::string> first_violation(const WeightedGraph& g,
                                                    std::span<const std::uint8_t> sigma) {
    if (static_cast<int>(sigma.size()) != g.n_vertices())
      return "sigma length " + std::to_string(sigma.size()) + " != " +
             std::to_string(g.n_vertices());
    for (auto s : sigma)
      if (s > 1) return std::string("sigma entries must be 0 or 1");
    for (const auto& e : g.edges()) {
      const bool cross = sigma[e.u] != sigma[e.v];
      if (cross != (e.w > 0))
        return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has weight " +
               std::to_string(e.w) + (cross ? " across parts" : " within a part");
    }
    return std::nullopt;
  }

  static bool satisfies(const WeightedGraph& g, std::span<const std::uint8_t> sigma) {
    return !first_violation(g, sigma).has_value();
  }

  /// Edge classes: negative edges inside part 0, inside part 1, positive cross edges.
  struct EdgeClasses {
    std::vector<std::size_t> within0;
    std::vector<std::size_t> within1;
    std::vector<std::size_t> cross;
  };

  EdgeClasses classify() const {
    EdgeClasses c;
    const auto edges = graph_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (sigma_[e.u] != sigma_[e.v])
        c.cross.push_back(i);
      else if (sigma_[e.u] == 0)
        c.within0.push_back(i);
      else
        c.within1.push_back(i);
    }
    return c;
  }

  /// +1 for an edge inside one part, -1 for a cross edge.
  int contraction_sign(Vertex a, Vertex b) const { return sigma_.at(a) == sigma_.at(b) ? 1 : -1; }

 private:
  WeightedGraph graph_;
  std::vector<std::uint8_t> sigma_;
};

/// Where each original vertex lives in the current (reduced) graph, and with
/// which sign: x_original = sign * x_current[representative].
class VertexMapping {
 public:
  struct Entry {
    Vertex representative = 0;
    int sign = 1;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  VertexMapping() = default;
  static VertexMapping identity(int n) {
    VertexMapping m;
    m.entries_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m.entries_[i] = {i, 1};
    return m;
  }

  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t original) const { return entries_.at(original); }
  std::span<const Entry> entries() const { return entries_; }

  /// Records x_eliminated = sign * x_anchor and removes `eliminated` from the
  /// current id space (ids above it shift down by one).
  VertexMapping after_contraction(Vertex eliminated, Vertex anchor, int sign) const {
    VertexMapping next = *this;
    for (auto& e : next.entries_) {
      if (e.representative == eliminated) {
        e.representative = anchor;
        e.sign *= sign;
      }
      if (e.representative > eliminated) --e.representative;
    }
    return next;
  }

  /// Expands an assignment of the reduced graph to all original vertices.
  std::vector<int> expand(std::span<const int> reduced) const {
    std::vector<int> full(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (e.representative < 0 || static_cast<std::size_t>(e.representative) >= reduced.size())
        throw std::invalid_argument("reduced assignment too short for mapping");
      full[i] = e.sign * reduced[e.representative];
    }
    return full;
  }

  friend bool operator==(const VertexMapping&, const VertexMapping&) = default;

 private:
  std::vector<Entry> entries_;
};

struct Contraction {
  WeightedGraph graph;
  VertexMapping mapping;
  /// Constant such that C_original(x) = C_reduced(x') + offset for every x
  /// obeying the imposed constraint.
  double offset = 0.0;
};

/// Eliminates vertex k by imposing x_k = sign * x_l on the edge (k, l).
///
/// Edges (k, i) move to (l, i) with weight sign * w(k, i), summing with an
/// existing (l, i); sums of exactly zero drop the edge. Vertex ids above k are
/// shifted down by one.
inline Contraction contract(const WeightedGraph& g, Vertex k, Vertex l, int sign,
                            const VertexMapping& mapping) {
  if (k == l) throw std::invalid_argument("contract: endpoints coincide");
  if (!g.find_edge(k, l))
    throw std::invalid_argument("contract: (" + std::to_string(k) + "," + std::to_string(l) +
                                ") is not an edge");
  if (sign != 1 && sign != -1) throw std::invalid_argument("contract: sign must be +/-1");
  if (mapping.size() == 0) throw std::invalid_argument("contract: empty mapping");

  auto relabel = [k](Vertex v) { return v > k ? v - 1 : v; };

  std::map<std::pair<Vertex, Vertex>, double> merged;
  double offset = 0.0;
  for (const auto& e : g.edges()) {
    if (e.u != k && e.v != k) {
      merged[{relabel(e.u), relabel(e.v)}] += e.w;
      continue;
    }
    // 1/2 w (1 - x_k x_i) = 1/2 w (1 - s) + 1/2 (s w)(1 - x_l x_i)
    offset += 0.5 * e.w * (1.0 - sign);
    const Vertex other = e.u == k ? e.v : e.u;
    if (other == l) continue;
    Vertex a = relabel(l), b = relabel(other);
    if (a > b) std::swap(a, b);
    merged[{a, b}] += sign * e.w;
  }

  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, w] : merged)
    if (w != 0.0) edges.push_back({key.first, key.second, w});

  return {WeightedGraph(g.n_vertices() - 1, std::move(edges)),
          mapping.after_contraction(k, l, sign), offset};
}

inline Contraction contract(const WeightedGraph& g, Vertex k, Vertex l, int sign) {
  return contract(g, k, l, sign, VertexMapping::identity(g.n_vertices()));
}

/// Contraction that also carries the parity labels; the surviving vertex keeps
/// its own label. Throws if the result is no longer parity-signed.
inline std::pair<ParitySignedGraph, Contraction> contract(const ParitySignedGraph& pg, Vertex k,
                                                          Vertex l, int sign,
                                                          const VertexMapping& mapping) {
  auto c = contract(pg.graph(), k, l, sign, mapping);
  std::vector<std::uint8_t> sigma;
  sigma.reserve(pg.sigma().size() - 1);
  for (Vertex v = 0; v < static_cast<Vertex>(pg.sigma().size()); ++v)
    if (v != k) sigma.push_back(pg.sigma()[v]);
  ParitySignedGraph reduced(c.graph, std::move(sigma));
  return {std::move(reduced), std::move(c)};
}

}  // namespace rqaoa
