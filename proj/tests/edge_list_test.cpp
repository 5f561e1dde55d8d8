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

#include "rqaoa/edge_list.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "rqaoa/generators.hpp"
#include "test_support.hpp"

namespace rqaoa {
namespace {

int failing_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(EdgeList, ParsesHeaderEdgesAndComments) {
  auto f = parse_edge_list("# a comment\nn 3\n0 1 2.5\n\n1 2 -1\n");
  EXPECT_EQ(f.graph, WeightedGraph(3, {{0, 1, 2.5}, {1, 2, -1.0}}));
  EXPECT_FALSE(f.sigma.has_value());
}

TEST(EdgeList, ParsesSigmaBlock) {
  auto f = parse_edge_list("n 3\n0 1 4\n1 2 -2\nsigma 0 1 1\n");
  ASSERT_TRUE(f.sigma.has_value());
  EXPECT_EQ(*f.sigma, (std::vector<std::uint8_t>{0, 1, 1}));
}

TEST(EdgeList, RejectsSelfLoop) { EXPECT_EQ(failing_line("n 2\n0 0 1.0\n"), 2); }

TEST(EdgeList, RejectsZeroWeight) { EXPECT_EQ(failing_line("n 2\n0 1 0\n"), 2); }

TEST(EdgeList, RejectsDuplicates) {
  EXPECT_EQ(failing_line("n 3\n0 1 1\n1 2 1\n1 0 3\n"), 4);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_EQ(failing_line("0 1 1\n"), 1);
  EXPECT_EQ(failing_line("n 2\n0 2 1\n"), 2);
  EXPECT_EQ(failing_line("n 2\n0 1\n"), 2);
  EXPECT_EQ(failing_line("n 2\n0 1 abc\n"), 2);
  EXPECT_EQ(failing_line("n 2\n0 1 1\nsigma 0\n"), 3);
  EXPECT_EQ(failing_line("n 2\n0 1 1\nsigma 0 2\n"), 3);
  EXPECT_EQ(failing_line("n 2\nsigma 0 1\n0 1 1\n"), 3);
  EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 1 1\nn 2\n"), ParseError);
}

TEST(EdgeList, FormatIsShortestRoundTrip) {
  WeightedGraph g(2, {{0, 1, 0.1}});
  EXPECT_EQ(format_edge_list(g), "n 2\n0 1 0.1\n");
}

TEST(EdgeList, RoundTripsRandomGraphsThroughFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "rqaoa_edge_list_test";
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_real_graph(rng, 1 + trial % 17, 0.4, 100.0);
    const auto path = (dir / ("g" + std::to_string(trial) + ".txt")).string();
    save_edge_list(g, path);
    EXPECT_EQ(load_edge_list(path), g);
  }
  std::filesystem::remove_all(dir);
}

TEST(EdgeList, RoundTripsParityLabels) {
  auto pg = random_parity_signed(4, 5, 0.6, 0.3, WeightDistribution{}, 2);
  auto f = parse_edge_list(format_edge_list(pg.graph(), pg.sigma()));
  EXPECT_EQ(f.graph, pg.graph());
  ASSERT_TRUE(f.sigma.has_value());
  EXPECT_TRUE(std::equal(f.sigma->begin(), f.sigma->end(), pg.sigma().begin()));
}

TEST(EdgeList, MissingFileThrows) {
  EXPECT_THROW(load_edge_list("/nonexistent/graph.txt"), std::runtime_error);
}

}  // namespace
}  // namespace rqaoa
