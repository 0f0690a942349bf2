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
#include <numeric>
#include <random>

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/embedder.hpp"
#include "pseudoturan/forbidden.hpp"
#include "pseudoturan/oracles.hpp"
#include "pseudoturan/random.hpp"
#include "test_support.hpp"

namespace pseudoturan {
namespace {

using testing::expect_code;
using testing::range_set;
using testing::set_of;

TEST(WideVertex, Star) {
  const auto star = complete_bipartite(1, 4);
  const std::vector<Bitset> ys{set_of(5, {1, 2, 3, 4})};
  EXPECT_EQ(find_wide_vertex(star, set_of(5, {0}), ys, Rational(1), Rational(2)), 0U);
}

TEST(WideVertex, CompleteBipartitePicksSmallestIndex) {
  const auto g = complete_bipartite(3, 3);
  const std::vector<Bitset> ys{set_of(6, {3, 4, 5})};
  EXPECT_EQ(find_wide_vertex(g, set_of(6, {2, 1, 0}), ys, Rational(1), Rational(2)), 0U);
}

TEST(WideVertex, RandomHost) {
  const auto g = random_graph(500, Rational(1, 2), 1);
  const std::vector<Bitset> ys{range_set(500, 50, 150), range_set(500, 150, 250)};
  const Vertex v = find_wide_vertex(g, range_set(500, 0, 50), ys, Rational(1, 2), Rational(2));
  EXPECT_LT(v, 50U);
  for (const auto& y : ys) EXPECT_GE(y.count_and(g.row(v)), 25U);  // (1/2)(1/2)100
}

TEST(WideVertex, Errors) {
  const auto g = empty_graph(6);
  const std::vector<Bitset> ys{set_of(6, {3, 4})};
  expect_code(ErrorCode::kNotFound,
              [&] { find_wide_vertex(g, set_of(6, {0, 1}), ys, Rational(1, 2), Rational(2)); });
  expect_code(ErrorCode::kInvalidArgument,
              [&] { find_wide_vertex(g, Bitset(6), ys, Rational(1, 2), Rational(2)); });
  expect_code(ErrorCode::kInvalidArgument,
              [&] { find_wide_vertex(g, set_of(6, {3}), ys, Rational(1, 2), Rational(2)); });
}

TEST(CleanPair, CompleteBipartiteUnchanged) {
  const auto g = complete_bipartite(4, 4);
  const auto x = range_set(8, 0, 4), y = range_set(8, 4, 8);
  const auto r = clean_pair(g, x, y, Rational(1));
  EXPECT_EQ(r.removed, 0U);
  EXPECT_EQ(r.x.count(), 4U);
  EXPECT_EQ(r.y.count(), 4U);
  EXPECT_TRUE(r.x_retained && r.y_retained);
}

TEST(CleanPair, IsolatedVertexRemoved) {
  GraphBuilder b(8);
  for (Vertex u = 1; u < 4; ++u)
    for (Vertex v = 4; v < 8; ++v) b.add_edge(u, v);
  const auto g = std::move(b).build();
  const auto r = clean_pair(g, range_set(8, 0, 4), range_set(8, 4, 8), Rational(1));
  EXPECT_EQ(r.removed, 1U);
  EXPECT_FALSE(r.x.test(0));
  EXPECT_EQ(r.x.count(), 3U);
  EXPECT_EQ(r.y.count(), 4U);
}

TEST(CleanPair, RandomHostRetainsNineTenths) {
  const auto g = random_graph(2000, Rational(1, 2), 2);
  const auto r = clean_pair(g, range_set(2000, 0, 200), range_set(2000, 200, 400), Rational(1, 2));
  EXPECT_TRUE(r.x_retained);
  EXPECT_TRUE(r.y_retained);
  EXPECT_GE(r.x.count() * 10, 1800U);
  EXPECT_GE(r.y.count() * 10, 1800U);
}

TEST(CleanPair, Degenerated) {
  expect_code(ErrorCode::kDegenerated, [] {
    clean_pair(empty_graph(4), set_of(4, {0, 1}), set_of(4, {2, 3}), Rational(1, 2));
  });
}

TEST(EmbedForest, SingleEdge) {
  const auto g = cubic_cayley(5);
  const Vertex u = 3;
  const auto edge = complete_graph(2);
  const std::vector<Bitset> sets{set_of(25, {u}), g.neighbor_set(u)};
  const auto e = embed_forest(g, edge, sets);
  EXPECT_EQ(e.map, (std::vector<Vertex>{u, g.neighbors(u).front()}));
}

TEST(EmbedForest, PathIntoHexagon) {
  const auto c6 = cycle_graph(6);
  const auto path = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const std::vector<Bitset> sets{set_of(6, {0, 1}), set_of(6, {2}), set_of(6, {3, 4})};
  ASSERT_TRUE(oracle::forest_feasible(c6, path, sets));
  const auto e = embed_forest(c6, path, sets);
  EXPECT_TRUE(is_valid_embedding(c6, path, e));
  EXPECT_EQ(e.map, (std::vector<Vertex>{1, 2, 3}));
}

TEST(EmbedForest, SpanningStar) {
  const auto k10 = complete_graph(10);
  const auto star = complete_bipartite(1, 9);
  std::vector<Bitset> sets;
  for (Vertex v = 0; v < 10; ++v) sets.push_back(set_of(10, {v}));
  const auto e = embed_forest(k10, star, sets);
  EXPECT_TRUE(is_valid_embedding(k10, star, e));
  EXPECT_EQ(e.map[0], 0U);
}

TEST(EmbedForest, Errors) {
  const auto k4 = complete_graph(4);
  const std::vector<Bitset> three{set_of(4, {0}), set_of(4, {1}), set_of(4, {2})};
  expect_code(ErrorCode::kNotAForest, [&] { embed_forest(k4, complete_graph(3), three); });
  expect_code(ErrorCode::kInvalidArgument, [&] { embed_forest(k4, complete_graph(2), three); });
  const std::vector<Bitset> wrong_size{set_of(5, {0}), set_of(5, {1})};
  expect_code(ErrorCode::kDimensionMismatch, [&] { embed_forest(k4, complete_graph(2), wrong_size); });
  const std::vector<Bitset> overlap{set_of(4, {0, 1}), set_of(4, {1})};
  expect_code(ErrorCode::kInvalidArgument, [&] { embed_forest(k4, complete_graph(2), overlap); });
  const std::vector<Bitset> two{set_of(4, {0}), set_of(4, {1})};
  expect_code(ErrorCode::kCandidateExhausted,
              [&] { embed_forest(empty_graph(4), complete_graph(2), two); });
}

TEST(EmbedForestProperty, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(derive_seed(5, 5));
  for (std::size_t n = 1; n <= 20; ++n) {
    for (std::size_t m = 1; m <= std::min<std::size_t>(5, n); ++m) {
      for (int rep = 0; rep < 12; ++rep) {
        const auto g = random_graph(n, Rational(1 + static_cast<std::int64_t>(rng() % 4), 5), rng());
        GraphBuilder fb(m);
        for (std::size_t i = 1; i < m; ++i) {
          if (rng() % 4 != 0) fb.add_edge(static_cast<Vertex>(rng() % i), static_cast<Vertex>(i));
        }
        const auto forest = std::move(fb).build();
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Bitset> sets(m, Bitset(n));
        for (std::size_t i = 0; i < n; ++i) {
          const auto slot = i < m ? i : rng() % (m + 1);
          if (slot < m) sets[slot].set(perm[i]);
        }
        const bool truth = oracle::forest_feasible(g, forest, sets);
        try {
          const auto e = embed_forest(g, forest, sets);
          ASSERT_TRUE(truth);
          ASSERT_TRUE(is_valid_embedding(g, forest, e));
          for (std::size_t i = 0; i < m; ++i) ASSERT_TRUE(sets[i].test(e.map[i]));
        } catch (const Error& e) {
          ASSERT_EQ(e.code(), ErrorCode::kCandidateExhausted);
          ASSERT_FALSE(truth) << e.what();
        }
      }
    }
  }
}

TEST(EmbedPetersen, CompleteHost) {
  const auto g = complete_graph(50);
  EmbedParams params;
  params.density = Rational(1);
  const auto out = embed_petersen(g, params);
  ASSERT_TRUE(out.ok()) << out.failure->reason;
  EXPECT_TRUE(is_valid_embedding(g, petersen_pattern(), *out.embedding));
  EXPECT_EQ(out.trace.size(), 15U);
}

TEST(EmbedPetersen, RandomHostsMostlySucceed) {
  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_graph(8000, Rational(1, 2), seed);
    const auto out = embed_petersen(g, EmbedParams{});
    if (out.ok()) {
      ++successes;
      EXPECT_TRUE(is_valid_embedding(g, petersen_pattern(), *out.embedding)) << seed;
    }
  }
  EXPECT_GE(successes, 9);
}

TEST(EmbedPetersen, SparseCayleyHostFailsAtV8) {
  EmbedParams params;
  params.density = Rational(30, 961);
  const auto out = embed_petersen(cubic_cayley(31), params);
  ASSERT_FALSE(out.ok());
  ASSERT_TRUE(out.failure.has_value());
  EXPECT_EQ(out.failure->stage, 11U);
  EXPECT_EQ(out.failure->name, "v8");
}

TEST(EmbedPetersen, DeterministicAndSound) {
  const auto g = random_graph(3000, Rational(1, 2), 4);
  EmbedParams params;
  params.fractions = FractionProfile::relaxed();
  const auto a = embed_petersen(g, params);
  const auto b = embed_petersen(g, params);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a.embedding, b.embedding);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].size, b.trace[i].size);
    EXPECT_EQ(a.trace[i].note, b.trace[i].note);
  }
  EXPECT_EQ(contains_pattern(g, petersen_pattern(), EmbedMode::kSubgraph).status,
            SearchStatus::kFound);
}

TEST(EmbedParams, Validation) {
  EmbedParams bad_margin;
  bad_margin.q_margin = Rational(1);
  expect_code(ErrorCode::kInvalidArgument, [&] { bad_margin.validate(); });
  EmbedParams bad_fraction;
  bad_fraction.fractions.z7 = Rational(0);
  expect_code(ErrorCode::kInvalidArgument, [&] { bad_fraction.validate(); });
  EmbedParams bad_density;
  bad_density.density = Rational(0);
  expect_code(ErrorCode::kInvalidArgument, [&] { bad_density.validate(); });
  expect_code(ErrorCode::kInvalidArgument, [] { FractionProfile::named("loose"); });
  EXPECT_EQ(FractionProfile::named("paper").z78, Rational(9, 200));
}

TEST(Preconditions, Examples) {
  const std::uint64_t big = 1'000'000'000;
  const Rational p(1, 100);
  const auto a = check_theorem_preconditions(big, p, 0.0001 * static_cast<double>(big) / 300);
  EXPECT_TRUE(a.alpha_ok);
  EXPECT_TRUE(a.density_ok);
  EXPECT_FALSE(check_theorem_preconditions(1000, Rational(9, 10), 1.0).density_ok);
  const auto c = check_theorem_preconditions(1'000'000, Rational(1, 5), std::sqrt(200000.0));
  EXPECT_FALSE(c.alpha_ok);
  EXPECT_NEAR(c.alpha_bound, 200.0, 1e-9);
}

TEST(EmbedGeneral, TriangleIntoCompleteGraph) {
  const auto k3 = complete_graph(3);
  EmbedParams params;
  params.density = Rational(1);
  const auto out = embed_general(complete_graph(9), k3, dhat2(k3).cert, params);
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(is_valid_embedding(complete_graph(9), k3, *out.embedding));
}

TEST(EmbedGeneral, PetersenWithListedCertificate) {
  const auto g = random_graph(8000, Rational(1, 2), 3);
  const OrderingCertificate cert{{0, 2, 5, 8, 1, 3, 4, 6, 7, 9}, {0, 4}, 2};
  const auto out = embed_general(g, petersen_pattern(), cert, EmbedParams{});
  ASSERT_TRUE(out.ok()) << out.failure->reason;
  EXPECT_EQ(out.mode, "tail");
  EXPECT_TRUE(is_valid_embedding(g, petersen_pattern(), *out.embedding));
}

TEST(EmbedGeneral, TriangleIntoTriangleFreeHostFails) {
  const auto k3 = complete_graph(3);
  EmbedParams params;
  params.density = Rational(12, 169);
  const auto out = embed_general(cubic_cayley(13), k3, dhat2(k3).cert, params);
  EXPECT_FALSE(out.ok());
  ASSERT_TRUE(out.failure.has_value());
  EXPECT_NE(out.failure->reason.find("CandidateExhausted"), std::string::npos) << out.failure->reason;
}

}  // namespace
}  // namespace pseudoturan
