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

#include "rqaoa/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rqaoa/generators.hpp"
#include "rqaoa/oracle.hpp"
#include "test_support.hpp"

namespace rqaoa {
namespace {

std::vector<int> spins(int n, std::uint32_t bits) {
  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = (bits >> i) & 1 ? -1 : 1;
  return x;
}

TEST(WeightedGraph, NormalizesAndSorts) {
  WeightedGraph g(4, {{3, 1, 2.0}, {0, 2, -1.0}, {1, 0, 4.0}});
  ASSERT_EQ(g.n_edges(), 3u);
  EXPECT_EQ(g.edge(0).u, 0);
  EXPECT_EQ(g.edge(0).v, 1);
  EXPECT_EQ(g.edge(2).u, 1);
  EXPECT_EQ(g.edge(2).v, 3);
  EXPECT_EQ(*g.weight(3, 1), 2.0);
  EXPECT_FALSE(g.weight(2, 3).has_value());
  EXPECT_EQ(g.total_weight(), 5.0);
  EXPECT_EQ(g.max_abs_weight(), 4.0);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(WeightedGraph, RejectsBadInput) {
  EXPECT_THROW(WeightedGraph(2, {{0, 0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, 0.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
}

TEST(CutValue, Triangle) {
  WeightedGraph g(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 4}});
  std::vector<int> x{1, -1, 1};
  EXPECT_EQ(cut_value(g, x), 3.0);
}

TEST(ParitySigned, RejectsWrongSigns) {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  EXPECT_THROW(ParitySignedGraph(g, {0, 1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(ParitySignedGraph(g, {0, 1, 0}));
  EXPECT_FALSE(ParitySignedGraph::satisfies(g, std::vector<std::uint8_t>{0, 0}));
}

TEST(ParitySigned, ClassifiesEdges) {
  WeightedGraph g(4, {{0, 1, -2.0}, {2, 3, -1.0}, {0, 2, 3.0}, {1, 3, 1.0}});
  ParitySignedGraph pg(g, {0, 0, 1, 1});
  auto c = pg.classify();
  EXPECT_EQ(c.within0.size(), 1u);
  EXPECT_EQ(c.within1.size(), 1u);
  EXPECT_EQ(c.cross.size(), 2u);
}

TEST(Generators, BipartiteEdgeCountWithinFiveSigma) {
  auto pg = random_weighted_bipartite(64, 64, 0.5, WeightDistribution{}, 11);
  const double count = static_cast<double>(pg.graph().n_edges());
  EXPECT_LE(std::abs(count - 2048.0), 160.0);
  for (const auto& e : pg.graph().edges()) {
    EXPECT_LT(e.u, 64);
    EXPECT_GE(e.v, 64);
    EXPECT_GT(e.w, 0.0);
    EXPECT_EQ(e.w, std::round(e.w));
  }
}

TEST(Generators, CompleteBipartiteHistogram) {
  auto g = complete_bipartite(4, 3).graph();
  EXPECT_EQ(g.n_edges(), 12u);
  EXPECT_EQ(degree_histogram(g), (DegreeHistogram{{3, 4}, {4, 3}}));
}

TEST(Generators, ZeroVarianceWeights) {
  auto pg = random_weighted_bipartite(2, 2, 1.0, 50, 0, 5);
  ASSERT_EQ(pg.graph().n_edges(), 4u);
  for (const auto& e : pg.graph().edges()) EXPECT_EQ(e.w, 50.0);
}

TEST(Generators, Deterministic) {
  auto a = random_weighted_bipartite(10, 12, 0.4, WeightDistribution{}, 99);
  auto b = random_weighted_bipartite(10, 12, 0.4, WeightDistribution{}, 99);
  auto c = random_weighted_bipartite(10, 12, 0.4, WeightDistribution{}, 100);
  EXPECT_EQ(a.graph(), b.graph());
  EXPECT_FALSE(a.graph() == c.graph());
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
}

TEST(Generators, ConnectedOnRequest) {
  EXPECT_THROW(random_weighted_bipartite(3, 3, 0.0, WeightDistribution{}, 1, true),
               std::invalid_argument);
  auto pg = random_weighted_bipartite(6, 6, 0.3, WeightDistribution{}, 1, true);
  EXPECT_TRUE(detail::connected(12, {pg.graph().edges().begin(), pg.graph().edges().end()}));
}

TEST(Generators, ParitySignedObeysSignRule) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto pg = random_parity_signed(5, 7, 0.5, 0.5, WeightDistribution{}, seed);
    EXPECT_TRUE(ParitySignedGraph::satisfies(pg.graph(), pg.sigma()));
  }
}

TEST(Contract, PathWithNegativeSign) {
  // Path 0-1-2, eliminate 2 with x2 = -x1.
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 3.0}});
  auto c = contract(g, 2, 1, -1);
  EXPECT_EQ(c.graph, WeightedGraph(2, {{0, 1, 1.0}}));
  EXPECT_EQ(c.offset, 3.0);
  EXPECT_EQ(c.mapping[2].representative, 1);
  EXPECT_EQ(c.mapping[2].sign, -1);
}

TEST(Contract, TriangleMergesWeights) {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  auto c = contract(g, 2, 1, 1);
  EXPECT_EQ(c.graph, WeightedGraph(2, {{0, 1, 2.0}}));
  EXPECT_EQ(c.offset, 0.0);
}

TEST(Contract, CancellingWeightsDropEdge) {
  WeightedGraph g(3, {{0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 2.0}});
  auto c = contract(g, 2, 1, -1);
  EXPECT_EQ(c.graph.n_edges(), 0u);
  EXPECT_EQ(c.graph.n_vertices(), 2);
}

TEST(Contract, RejectsNonEdge) {
  WeightedGraph g(3, {{0, 1, 1.0}});
  EXPECT_THROW(contract(g, 2, 1, 1), std::invalid_argument);
  EXPECT_THROW(contract(g, 1, 0, 2), std::invalid_argument);
}

// Cost is preserved on every assignment obeying the imposed constraint.
TEST(Contract, PreservesCostOnConstrainedAssignments) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 11;
    auto g = testing::random_mixed_graph(rng, n, 0.5, 5);
    if (g.n_edges() == 0) continue;
    const auto& e = g.edge(rng() % g.n_edges());
    const int sign = rng() % 2 ? 1 : -1;
    auto c = contract(g, e.v, e.u, sign);
    for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
      const auto reduced = spins(n - 1, bits);
      const auto full = c.mapping.expand(reduced);
      EXPECT_EQ(full[e.v], sign * full[e.u]);
      EXPECT_NEAR(cut_value(g, full), cut_value(c.graph, reduced) + c.offset, 1e-9);
    }
  }
}

TEST(Contract, ParityContractionStaysParitySigned) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto pg = testing::random_parity_graph(rng, 16);
    while (pg.graph().n_edges() > 0) {
      const auto& e = pg.graph().edge(rng() % pg.graph().n_edges());
      auto [next, c] = contract(pg, e.v, e.u, pg.contraction_sign(e.u, e.v),
                                VertexMapping::identity(pg.graph().n_vertices()));
      EXPECT_TRUE(ParitySignedGraph::satisfies(next.graph(), next.sigma()));
      EXPECT_EQ(next.parity(e.u < e.v ? e.u : e.u - 1), pg.parity(e.u));
      pg = std::move(next);
    }
  }
}

TEST(Contract, ChainedMappingExpands) {
  WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  auto c1 = contract(g, 3, 2, -1);
  auto c2 = contract(c1.graph, 2, 1, -1, c1.mapping);
  std::vector<int> reduced{1, 1};
  EXPECT_EQ(c2.mapping.expand(reduced), (std::vector<int>{1, 1, -1, 1}));
  EXPECT_THROW(c2.mapping.expand(std::vector<int>{1}), std::invalid_argument);
}

}  // namespace
}  // namespace rqaoa
