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
#include <numeric>

#include "pseudoturan/oracles.hpp"
#include "pseudoturan/ordering.hpp"
#include "pseudoturan/random.hpp"
#include "test_support.hpp"

namespace pseudoturan {
namespace {

using testing::expect_code;
using testing::random_small;

std::vector<Vertex> identity(std::size_t m) {
  std::vector<Vertex> o(m);
  std::iota(o.begin(), o.end(), Vertex{0});
  return o;
}

const OrderingCertificate kPetersenCert{{0, 2, 5, 8, 1, 3, 4, 6, 7, 9}, {0, 4}, 2};

TEST(EvalD2, Cliques) {
  EXPECT_EQ(eval_d2(complete_graph(3), identity(3)), 2U);
  EXPECT_EQ(eval_d2(complete_graph(3), std::vector<Vertex>{2, 0, 1}), 2U);
  EXPECT_EQ(eval_d2(empty_graph(5), identity(5)), 0U);
  for (std::size_t t = 2; t <= 7; ++t) {
    auto o = identity(t);
    std::reverse(o.begin(), o.end());
    EXPECT_EQ(eval_d2(complete_graph(t), o), 2 * (t - 2)) << t;
  }
}

TEST(EvalD2, Errors) {
  expect_code(ErrorCode::kNotAPermutation, [] { eval_d2(complete_graph(3), std::vector<Vertex>{0, 0, 1}); });
  expect_code(ErrorCode::kNotAPermutation, [] { eval_d2(complete_graph(3), std::vector<Vertex>{0, 1}); });
}

TEST(D2, Examples) {
  const auto p = d2(petersen_pattern());
  EXPECT_EQ(p.d, Rational(3, 2));
  EXPECT_EQ(p.cert.two_d, 3U);
  EXPECT_EQ(d2(complete_graph(4)).d, Rational(2));
  // oracle and hand check agree on 1/2 via the ordering 0,1,3,2,4
  EXPECT_EQ(oracle::d2_two(cycle_graph(5)), 1U);
  EXPECT_EQ(eval_d2(cycle_graph(5), std::vector<Vertex>{0, 1, 3, 2, 4}), 1U);
  EXPECT_EQ(d2(cycle_graph(5)).d, Rational(1, 2));
  expect_code(ErrorCode::kTooLarge, [] { d2(empty_graph(kMaxSubsetDp + 1)); });
}

TEST(EvalDhat2, PetersenCertificate) {
  const auto p = petersen_pattern();
  EXPECT_EQ(eval_dhat2(p, kPetersenCert), 2U);
  const std::vector<Vertex> tail{1, 3, 4, 6, 7, 9};
  EXPECT_EQ(induced(p, tail).edge_count(), 5U);
  EXPECT_FALSE(find_violation(p, kPetersenCert).has_value());
  EXPECT_EQ(eval_tail(p, kPetersenCert.ordering, 4), 2U);
}

TEST(EvalDhat2, SingletonIntervalsEqualD2) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = random_small(3 + seed % 6, seed);
    std::vector<std::size_t> all(f.n());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const OrderingCertificate c{identity(f.n()), all, 0};
    EXPECT_EQ(eval_dhat2(f, c), eval_d2(f, c.ordering));
  }
}

TEST(EvalDhat2, Errors) {
  const OrderingCertificate whole{identity(3), {0}, 2};
  expect_code(ErrorCode::kIntervalNotForest, [&] { eval_dhat2(complete_graph(3), whole); });
  const OrderingCertificate bad_first{identity(3), {1}, 2};
  expect_code(ErrorCode::kInvalidArgument, [&] { eval_dhat2(empty_graph(3), bad_first); });
  const OrderingCertificate unsorted{identity(3), {0, 2, 1}, 2};
  expect_code(ErrorCode::kInvalidArgument, [&] { eval_dhat2(empty_graph(3), unsorted); });
  const OrderingCertificate not_perm{{0, 0, 1}, {0}, 2};
  expect_code(ErrorCode::kNotAPermutation, [&] { eval_dhat2(empty_graph(3), not_perm); });
}

TEST(FindViolation, ReportsFirstOffendingEdge) {
  auto tight = kPetersenCert;
  tight.two_d = 1;
  const auto v = find_violation(petersen_pattern(), tight);
  ASSERT_TRUE(v.has_value());
  EXPECT_GT(v->value, 1U);
}

TEST(Dhat2, Examples) {
  const auto p = dhat2(petersen_pattern());
  EXPECT_EQ(p.cert.two_d, 2U);
  EXPECT_EQ(p.d, Rational(1));
  EXPECT_EQ(eval_dhat2(petersen_pattern(), p.cert), 2U);
  EXPECT_EQ(dhat2(complete_graph(3)).cert.two_d, 2U);
  EXPECT_EQ(oracle::dhat2_two(complete_graph(3)), 2U);
}

TEST(Dhat2, HeuristicMode) {
  Dhat2Options options;
  options.exact = false;
  options.restarts = 300;
  const auto p = dhat2(petersen_pattern(), options);
  EXPECT_TRUE(p.cert.heuristic);
  EXPECT_LE(p.cert.two_d, 3U);
  EXPECT_EQ(eval_dhat2(petersen_pattern(), p.cert), p.cert.two_d);
  expect_code(ErrorCode::kTooLarge, [] { dhat2(empty_graph(kMaxExactDhat2 + 1)); });
}

TEST(ExpUpper, Examples) {
  EXPECT_EQ(exp_upper(petersen_pattern()), Rational(2, 3));
  EXPECT_EQ(exp_upper(complete_graph(3)), Rational(2, 3));
  for (std::size_t t : {4U, 5U}) {
    const auto k = complete_graph(t);
    const auto two_d = oracle::dhat2_two(k);
    EXPECT_EQ(exp_upper(k), exp_upper_from_two_d(two_d));
    const auto tt = static_cast<std::int64_t>(t);
    EXPECT_LE(exp_upper(k), Rational(1) - Rational(1, 2 * tt - 3)) << t;
  }
}

TEST(OrderingProperty, D2MatchesBruteForce) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto f = random_small(2 + i % 6, derive_seed(3, i), 20 + static_cast<unsigned>(i % 7) * 10);
    const auto r = d2(f);
    ASSERT_EQ(r.cert.two_d, oracle::d2_two(f)) << i;
    ASSERT_EQ(eval_d2(f, r.cert.ordering), r.cert.two_d);
  }
  for (const auto& f : {complete_graph(3), complete_graph(4), complete_graph(5), cycle_graph(4),
                        cycle_graph(5), cycle_graph(6), cycle_graph(7), complete_bipartite(2, 3)}) {
    EXPECT_EQ(d2(f).cert.two_d, oracle::d2_two(f));
  }
}

TEST(OrderingProperty, Dhat2ExactMatchesBruteForceAndIsBelowD2) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto f = random_small(2 + i % 6, derive_seed(4, i), 20 + static_cast<unsigned>(i % 7) * 10);
    const auto hat = dhat2(f);
    ASSERT_EQ(hat.cert.two_d, oracle::dhat2_two(f)) << i;
    ASSERT_EQ(eval_dhat2(f, hat.cert), hat.cert.two_d);
    ASSERT_LE(hat.cert.two_d, d2(f).cert.two_d);
  }
}

TEST(OrderingProperty, ExpUpperMonotoneUnderEdgeDeletion) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto f = random_small(3 + i % 5, derive_seed(6, i), 60);
    const auto base = exp_upper(f);
    const auto edges = f.edges();
    for (std::size_t drop = 0; drop < edges.size(); ++drop) {
      auto fewer = edges;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      ASSERT_LE(exp_upper(Graph::from_edges(f.n(), fewer)), base) << i;
    }
  }
}

TEST(BestBreakpoints, PetersenOrdering) {
  const auto choice = best_breakpoints(petersen_pattern(), kPetersenCert.ordering);
  EXPECT_EQ(choice.two_d, 2U);
  OrderingCertificate c{kPetersenCert.ordering, choice.breakpoints, choice.two_d};
  EXPECT_EQ(eval_dhat2(petersen_pattern(), c), 2U);
}

}  // namespace
}  // namespace pseudoturan
