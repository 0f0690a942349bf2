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

#include <algorithm>
#include <random>
#include <set>

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/forbidden.hpp"
#include "pseudoturan/oracles.hpp"
#include "test_support.hpp"

namespace pseudoturan {
namespace {

using testing::expect_code;

TEST(Cayley, SmallGroups) {
  const auto matching = cayley_graph({{2, 2}, {{1, 1}}});
  EXPECT_EQ(matching.n(), 4U);
  EXPECT_EQ(matching.regular_degree(), std::optional<std::size_t>(1));
  EXPECT_EQ(cayley_graph({{5}, {{1}, {4}}}), cycle_graph(5));
  expect_code(ErrorCode::kAsymmetricSet, [] { cayley_graph({{5, 5}, {{1, 0}}}); });
  expect_code(ErrorCode::kIdentityInSet, [] { cayley_graph({{5}, {{0}}}); });
}

TEST(CubicCayley, ConnectionSetAtFive) {
  std::set<std::vector<std::uint32_t>> expected;
  for (std::uint32_t x = 1; x < 5; ++x) expected.insert({x, x * x * x % 5});
  const auto spec = cubic_cayley_spec(5);
  const std::set<std::vector<std::uint32_t>> got(spec.connection.begin(), spec.connection.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got, (std::set<std::vector<std::uint32_t>>{{1, 1}, {2, 3}, {3, 2}, {4, 4}}));
  const auto g = cubic_cayley(5);
  EXPECT_EQ(g.n(), 25U);
  EXPECT_EQ(g.edge_count(), 50U);
}

TEST(CubicCayley, CharacteristicTwoAndThree) {
  const auto spec = cubic_cayley_spec(2);
  EXPECT_EQ(spec.connection, (std::vector<std::vector<std::uint32_t>>{{1, 1}}));
  EXPECT_EQ(cubic_cayley(2).regular_degree(), std::optional<std::size_t>(1));
  expect_code(ErrorCode::kBadCharacteristic, [] { cubic_cayley(3); });
  expect_code(ErrorCode::kBadCharacteristic, [] { cubic_cayley(9); });
  expect_code(ErrorCode::kBadCharacteristic, [] { kopparty(3, 1); });
}

TEST(CubicCayley, RegularAndTranslationInvariant) {
  for (std::uint32_t p : {5U, 7U, 11U, 13U, 17U}) {
    const auto spec = cubic_cayley_spec(p);
    const auto g = cayley_graph(spec);
    EXPECT_EQ(g.regular_degree(), std::optional<std::size_t>(p - 1));
    std::mt19937_64 rng(p);
    for (int k = 0; k < 20; ++k) {
      const auto shift = spec.element_at(rng() % g.n());
      auto translate = [&](Vertex v) {
        auto e = spec.element_at(v);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = (e[i] + shift[i]) % spec.dims[i];
        return static_cast<Vertex>(spec.index_of(e));
      };
      for (Vertex u = 0; u < g.n(); ++u) {
        const Vertex v = static_cast<Vertex>(rng() % g.n());
        ASSERT_EQ(g.adjacent(u, v), g.adjacent(translate(u), translate(v)));
      }
    }
  }
}

TEST(Kopparty, BinaryCube) {
  const auto f = Field::make(2, 3);
  EXPECT_EQ(kopparty_trace_set(f).size(), 4U);
  const auto g = kopparty(2, 3);
  EXPECT_EQ(g.n(), 512U);
  EXPECT_EQ(g.regular_degree(), std::optional<std::size_t>(28));
}

TEST(Kopparty, PrimeFive) {
  const auto f = Field::make(5, 1);
  EXPECT_EQ(kopparty_trace_set(f), (std::vector<FieldElement>{f.element(1), f.element(4)}));
  const auto g = kopparty(5, 1);
  EXPECT_EQ(g.n(), 125U);
  EXPECT_EQ(g.regular_degree(), std::optional<std::size_t>(8));
}

TEST(Kopparty, ConnectionSetSymmetric) {
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {5, 1}, {5, 2}, {7, 1}, {11, 1}}) {
    const auto spec = kopparty_spec(Field::make(p, h));
    std::set<std::vector<std::uint32_t>> s(spec.connection.begin(), spec.connection.end());
    EXPECT_EQ(s.size(), spec.connection.size());
    for (const auto& e : spec.connection) {
      auto neg = e;
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = (spec.dims[i] - neg[i]) % spec.dims[i];
      EXPECT_TRUE(s.count(neg)) << p << "^" << h;
    }
    EXPECT_EQ(cayley_graph(spec).regular_degree(), std::optional<std::size_t>(s.size()));
  }
}

std::size_t count_class(const std::vector<ProjectivePoint>& pts, PointClass c) {
  return static_cast<std::size_t>(
      std::count_if(pts.begin(), pts.end(), [&](const auto& pt) { return pt.cls == c; }));
}

TEST(Projective, Counts) {
  const auto f5 = Field::make(5, 1);
  const auto pts = projective_points(2, f5);
  EXPECT_EQ(pts.size(), 31U);
  std::size_t absolute = 0;
  for (const auto& pt : pts) absolute += dot(f5, pt.coords, pt.coords) == f5.zero();
  EXPECT_EQ(absolute, 6U);
  EXPECT_EQ(count_class(pts, PointClass::kAbsolute), 6U);
  EXPECT_EQ(projective_points(1, Field::make(3, 1)).size(), 4U);
  expect_code(ErrorCode::kEvenCharacteristic, [] { projective_points(2, Field::make(2, 2)); });
}

TEST(Projective, ClassesCanonicalAndScaleInvariant) {
  for (std::uint32_t q : {5U, 7U, 9U, 13U}) {
    const auto f = Field::of_order(q);
    const auto pts = projective_points(2, f);
    EXPECT_EQ(count_class(pts, PointClass::kAbsolute) + count_class(pts, PointClass::kSquare) +
                  count_class(pts, PointClass::kNonsquare),
              pts.size());
    for (const auto& pt : pts) {
      ASSERT_EQ(canonicalize(f, pt.coords), pt.coords);
      const int chi = f.quad_char(dot(f, pt.coords, pt.coords));
      const auto expected = chi == 0 ? PointClass::kAbsolute
                            : chi == 1 ? PointClass::kSquare
                                       : PointClass::kNonsquare;
      ASSERT_EQ(pt.cls, expected);
      for (std::uint32_t c = 1; c < q; ++c) {
        std::vector<FieldElement> scaled;
        for (auto x : pt.coords) scaled.push_back(f.mul(f.element(c), x));
        ASSERT_EQ(classify(f, scaled), pt.cls);
        ASSERT_EQ(canonicalize(f, scaled), pt.coords);
      }
      ASSERT_EQ(decode_projective_label(encode_label(pt)).coords, pt.coords);
    }
  }
}

TEST(AkGraph, VertexCounts) {
  EXPECT_EQ(ak_graph(2, Field::make(5, 1)).n(), 25U);
  EXPECT_EQ(ak_graph(2, Field::make(3, 1)).n(), 9U);
}

TEST(AkGraph, FourCliqueFree) {
  for (std::uint32_t q : {5U, 7U}) {
    const auto c = clique_number(ak_graph(2, Field::make(q, 1)), 3);
    ASSERT_TRUE(c.number.has_value()) << q;
    EXPECT_LE(*c.number, 3U);
  }
}

TEST(AkGraph, NonsquareSubgraphs) {
  const auto f5 = Field::make(5, 1);
  EXPECT_TRUE(oracle::triangle_free(nonsquare_subgraph(ak_graph(2, f5))));
  const auto k5 = clique_number(nonsquare_subgraph(ak_graph(4, f5)), 4);
  ASSERT_TRUE(k5.number.has_value());
  EXPECT_LE(*k5.number, 4U);
  const auto f3 = Field::make(3, 1);
  EXPECT_EQ(nonsquare_subgraph(ak_graph(2, f3)).n(),
            count_class(projective_points(2, f3), PointClass::kNonsquare));
}

TEST(AkGraph, IrregularDegrees) {
  const auto g = ak_graph(2, Field::make(5, 1));
  EXPECT_NE(g.min_degree(), g.max_degree());
}

TEST(EvenT, CliqueFree) {
  for (std::uint32_t q : {5U, 7U}) {
    const auto c = even_t_construction(4, Field::make(q, 1));
    const auto search = clique_number(c.graph, 3);
    ASSERT_TRUE(search.number.has_value()) << q;
    EXPECT_LE(*search.number, 3U);
  }
  expect_code(ErrorCode::kInvalidArgument, [] { even_t_construction(3, Field::make(5, 1)); });
}

TEST(DenseVertex, Examples) {
  const std::vector<Vertex> pair{0, 1};
  const auto k4 = dense_vertex(complete_graph(4), pair);
  EXPECT_EQ(k4.vertex, 0U);
  EXPECT_EQ(k4.ratio, Rational(1, 3));
  const auto star = complete_bipartite(1, 4);
  const std::vector<Vertex> center_leaf{0, 1};
  const auto s = dense_vertex(star, center_leaf);
  EXPECT_EQ(s.vertex, 1U);
  EXPECT_EQ(s.ratio, Rational(1));
  expect_code(ErrorCode::kEmptySet, [] { dense_vertex(complete_graph(3), {}); });
  const std::vector<Vertex> isolated{0};
  expect_code(ErrorCode::kIsolatedVertexInV1, [&] { dense_vertex(empty_graph(2), isolated); });
}

TEST(DenseVertex, NonsquareShareInAk45) {
  const auto f = Field::make(5, 1);
  const auto ak = ak_graph(4, f);
  std::vector<Vertex> nonsquares;
  for (Vertex v = 0; v < ak.n(); ++v) {
    if (decode_projective_label(ak.label(v)).cls == PointClass::kNonsquare) nonsquares.push_back(v);
  }
  EXPECT_GE(dense_vertex(ak, nonsquares).ratio, Rational(2, 5));
}

TEST(DistanceGraph, DegreeIsUnitCircleSize) {
  for (std::uint32_t q : {5U, 7U, 11U}) {
    const auto f = Field::make(q, 1);
    std::size_t circle = 0;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) circle += (a * a + b * b) % q == 1;
    const auto g = distance_graph(f);
    EXPECT_EQ(g.n(), std::size_t{q} * q);
    EXPECT_EQ(g.regular_degree(), std::optional<std::size_t>(circle)) << q;
    EXPECT_TRUE(oracle::k23_free(g)) << q;
  }
}

TEST(DistanceGraph, TriangleScanIsRecordedNotAsserted) {
  // the outcome per q is a measurement; only check the two scanners agree
  for (std::uint32_t q : {5U, 7U, 11U, 13U}) {
    const auto g = distance_graph(Field::make(q, 1));
    EXPECT_EQ(is_triangle_free(g).free, oracle::triangle_free(g)) << q;
  }
}

TEST(CrossProduct, BasisAndDependence) {
  const auto f = Field::make(5, 1);
  const auto o = f.zero(), i = f.one();
  const std::vector<std::vector<FieldElement>> basis{{i, o, o}, {o, i, o}};
  EXPECT_EQ(cross_product(f, basis), (std::vector<FieldElement>{o, o, i}));
  const auto two = f.element(2);
  const std::vector<std::vector<FieldElement>> dependent{{i, two, o}, {two, f.element(4), o}};
  EXPECT_EQ(cross_product(f, dependent), (std::vector<FieldElement>{o, o, o}));
}

std::vector<std::vector<FieldElement>> random_vectors(const Field& f, std::size_t count,
                                                      std::size_t t, std::mt19937_64& rng) {
  std::vector<std::vector<FieldElement>> vs(count, std::vector<FieldElement>(t));
  for (auto& v : vs)
    for (auto& x : v) x = f.element(static_cast<std::uint32_t>(rng() % f.order()));
  return vs;
}

TEST(CrossProduct, GramIdentity) {
  const auto f = Field::make(7, 1);
  std::mt19937_64 rng(11);
  for (int s = 0; s < 100; ++s) {
    const auto vs = random_vectors(f, 4, 5, rng);
    const auto c = cross_product(f, vs);
    std::vector<std::vector<FieldElement>> gram(4, std::vector<FieldElement>(4));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) gram[a][b] = dot(f, vs[a], vs[b]);
    ASSERT_EQ(dot(f, c, c), determinant(f, gram));
  }
}

TEST(CrossProduct, Orthogonal) {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {5U, 7U}) {
    const auto f = Field::make(q, 1);
    for (std::size_t t : {3U, 4U, 5U}) {
      for (int s = 0; s < 50; ++s) {
        const auto vs = random_vectors(f, t - 1, t, rng);
        const auto c = cross_product(f, vs);
        for (const auto& v : vs) ASSERT_EQ(dot(f, c, v), f.zero());
      }
    }
  }
}

TEST(RandomGraph, DeterministicAndBounded) {
  EXPECT_EQ(random_graph(300, Rational(1, 2), 9), random_graph(300, Rational(1, 2), 9));
  EXPECT_NE(random_graph(300, Rational(1, 2), 9), random_graph(300, Rational(1, 2), 10));
  EXPECT_EQ(random_graph(20, Rational(1), 1), complete_graph(20));
  EXPECT_EQ(random_graph(20, Rational(0), 1).edge_count(), 0U);
  expect_code(ErrorCode::kInvalidArgument, [] { random_graph(10, Rational(3, 2), 1); });
}

}  // namespace
}  // namespace pseudoturan
