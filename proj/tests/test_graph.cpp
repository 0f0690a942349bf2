// Copyright 2026 The pseudoturan Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/oracles.hpp"
#include "pseudoturan/spectral.hpp"
#include "test_support.hpp"

namespace pseudoturan {
namespace {

using testing::expect_code;

TEST(Graph, FromEdges) {
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_EQ(Graph::from_edges(3, tri), complete_graph(3));
  const std::vector<Edge> matching{{0, 1}, {2, 3}};
  const auto m = Graph::from_edges(4, matching);
  EXPECT_EQ(m.regular_degree(), std::optional<std::size_t>(1));
  const std::vector<Edge> loop{{0, 0}};
  expect_code(ErrorCode::kLoopEdge, [&] { Graph::from_edges(2, loop); });
  const std::vector<Edge> far{{0, 5}};
  expect_code(ErrorCode::kVertexOutOfRange, [&] { Graph::from_edges(2, far); });
}

TEST(Graph, Induced) {
  const std::vector<Vertex> s{0, 1, 2};
  EXPECT_EQ(induced(complete_graph(4), s), complete_graph(3));
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_EQ(induced(cycle_graph(5), s), Graph::from_edges(3, path));
}

TEST(Graph, PetersenSixSetsAreTriangleFree) {
  const auto p = petersen_pattern();
  for (unsigned mask = 0; mask < 1024; ++mask) {
    if (std::popcount(mask) != 6) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 10; ++v) {
      if (mask >> v & 1U) s.push_back(v);
    }
    ASSERT_TRUE(oracle::triangle_free(induced(p, s)));
  }
}

TEST(Graph, CommonNeighbors) {
  EXPECT_EQ(common_neighbors(complete_graph(4), 0, 1), (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(common_neighbors(cycle_graph(5), 0, 1).empty());
  // strongly regular (10,3,0,1): every non-adjacent pair has exactly one common neighbour
  const auto p = petersen_pattern();
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = u + 1; v < 10; ++v) {
      std::size_t brute = 0;
      for (Vertex w = 0; w < 10; ++w) brute += p.adjacent(u, w) && p.adjacent(v, w);
      EXPECT_EQ(common_neighbors(p, u, v).size(), brute);
      EXPECT_EQ(brute, p.adjacent(u, v) ? 0U : 1U);
    }
  }
}

TEST(Graph, PetersenShape) {
  const auto p = petersen_pattern();
  EXPECT_EQ(p.n(), 10U);
  EXPECT_EQ(p.regular_degree(), std::optional<std::size_t>(3));
  std::size_t triangles = 0;
  for (Vertex a = 0; a < 10; ++a)
    for (Vertex b = a + 1; b < 10; ++b)
      for (Vertex c = b + 1; c < 10; ++c)
        triangles += p.adjacent(a, b) && p.adjacent(b, c) && p.adjacent(a, c);
  EXPECT_EQ(triangles, 0U);
}

TEST(Graph, PetersenIsKneserGraph) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < pairs.size(); ++i) {
    for (Vertex j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  const auto kneser = Graph::from_edges(10, edges);
  const auto p = petersen_pattern();
  ASSERT_EQ(kneser.edge_count(), p.edge_count());
  // an induced copy on all vertices is an isomorphism
  EXPECT_TRUE(oracle::contains(kneser, p, EmbedMode::kInduced));
}

TEST(Graph, EmbeddingChecker) {
  const auto host = cycle_graph(6);
  const auto path = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_TRUE(is_valid_embedding(host, path, {{0, 1, 2}}));
  EXPECT_TRUE(is_valid_embedding(host, path, {{0, 1, 2}}, EmbedMode::kInduced));
  EXPECT_FALSE(is_valid_embedding(host, path, {{0, 2, 1}}));
  EXPECT_FALSE(is_valid_embedding(host, path, {{0, 1, 0}}));
  EXPECT_FALSE(is_valid_embedding(host, path, {{0, 1}}));
  const auto tri_host = complete_graph(3);
  EXPECT_TRUE(is_valid_embedding(tri_host, path, {{0, 1, 2}}));
  EXPECT_FALSE(is_valid_embedding(tri_host, path, {{0, 1, 2}}, EmbedMode::kInduced));
}

TEST(Graph, DiscrepancyExtremes) {
  EXPECT_EQ(sample_discrepancy(complete_graph(30), Rational(1), 500, 7), 0.0);
  EXPECT_EQ(sample_discrepancy(empty_graph(30), Rational(0), 500, 7), 0.0);
}

TEST(Graph, DiscrepancyBelowSecondEigenvalue) {
  const auto g = cubic_cayley(13);
  const double lambda = lambda_nontrivial(g);
  EXPECT_LE(sample_discrepancy(g, Rational(12, 169), 10000, 1), lambda + 1e-6);
  EXPECT_EQ(sample_discrepancy(g, Rational(12, 169), 200, 5),
            sample_discrepancy(g, Rational(12, 169), 200, 5));
}

TEST(GraphIo, RoundTrip) {
  for (const auto& g : {complete_graph(3), cubic_cayley(7), empty_graph(4)}) {
    std::stringstream ss;
    write_edge_list(g, ss);
    EXPECT_EQ(read_edge_list(ss), g);
  }
  std::stringstream ss;
  write_edge_list(complete_graph(3), ss);
  EXPECT_EQ(ss.str(), "# n=3\n0 1\n0 2\n1 2\n");
}

TEST(GraphIo, Malformed) {
  for (const std::string text : {"0 1\n", "# n=x\n", "# n=3\n0\n", "# n=3\n0 1 junk\n"}) {
    std::istringstream in(text);
    expect_code(ErrorCode::kMalformedLine, [&] { read_edge_list(in); });
  }
  std::istringstream far("# n=3\n0 7\n");
  expect_code(ErrorCode::kMalformedLine, [&] { read_edge_list(far); });
  expect_code(ErrorCode::kIoError,
              [] { read_edge_list(std::filesystem::path("/nonexistent/g.el")); });
}

TEST(GraphProperty, ConstructionsAreSimple) {
  const auto f5 = Field::make(5, 1);
  const auto ak = ak_graph(2, f5);
  for (const auto& g : {cubic_cayley(11), kopparty(5, 1), ak, nonsquare_subgraph(ak),
                        distance_graph(Field::make(7, 1)), random_graph(200, Rational(1, 3), 4)}) {
    for (Vertex u = 0; u < g.n(); ++u) {
      ASSERT_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.n(); ++v) ASSERT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

}  // namespace
}  // namespace pseudoturan
