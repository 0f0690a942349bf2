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
#include <numbers>

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/spectral.hpp"
#include "test_support.hpp"

namespace pseudoturan {
namespace {

using testing::expect_code;

void expect_spectrum(const std::vector<double>& got, std::vector<double> want) {
  std::sort(want.rbegin(), want.rend());
  EXPECT_TRUE(same_spectrum(got, want, 1e-9));
}

TEST(Spectrum, CayleyTrivialCharacter) {
  for (std::uint32_t p : {5U, 7U, 11U}) {
    const auto s = cayley_spectrum(cubic_cayley_spec(p));
    EXPECT_NEAR(s.lambda1, p - 1.0, 1e-9);
    EXPECT_EQ(s.method, SpectralMethod::kCharacterSum);
  }
  expect_spectrum(cayley_spectrum({{2, 2}, {{1, 1}}}).eigenvalues, {1, 1, -1, -1});
}

TEST(Spectrum, DenseExamples) {
  expect_spectrum(spectrum_dense(complete_graph(3)).eigenvalues, {2, -1, -1});
  const double c1 = 2 * std::cos(2 * std::numbers::pi / 5), c2 = 2 * std::cos(4 * std::numbers::pi / 5);
  expect_spectrum(spectrum_dense(cycle_graph(5)).eigenvalues, {2, c1, c1, c2, c2});
  expect_spectrum(spectrum_dense(petersen_pattern()).eigenvalues, {3, 1, 1, 1, 1, 1, -2, -2, -2, -2});
  expect_code(ErrorCode::kTooLarge, [] { spectrum_dense(complete_graph(20), 10); });
}

TEST(Spectrum, LambdaExamples) {
  EXPECT_NEAR(lambda_nontrivial(complete_graph(8)), 1.0, 1e-9);
  EXPECT_LE(lambda_nontrivial(cubic_cayley(13)), 2 * std::sqrt(13.0) + 1);
  const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  EXPECT_NEAR(lambda_nontrivial(Graph::from_edges(6, two_triangles)), 2.0, 1e-9);
}

TEST(Spectrum, IterativeMatchesDense) {
  for (const auto& g : {cubic_cayley(17), kopparty(5, 1), distance_graph(Field::make(11, 1)),
                        random_graph(300, Rational(1, 4), 2)}) {
    EXPECT_NEAR(lambda_iterative(g), lambda_nontrivial(g), 1e-5);
  }
}

TEST(Spectrum, TraceAndSquareSums) {
  for (const auto& g : {cubic_cayley(11), kopparty(5, 1), ak_graph(2, Field::make(7, 1)),
                        random_graph(200, Rational(1, 2), 3), petersen_pattern()}) {
    const auto s = spectrum_dense(g);
    ASSERT_EQ(s.eigenvalues.size(), g.n());
    double sum = 0, squares = 0;
    for (double e : s.eigenvalues) sum += e, squares += e * e;
    const double tol = static_cast<double>(g.n()) * 1e-6;
    EXPECT_NEAR(sum, 0.0, tol);
    EXPECT_NEAR(squares, 2.0 * static_cast<double>(g.edge_count()), tol);
  }
}

TEST(Jumbled, CubicEleven) {
  const auto r = jumbled_cert(cubic_cayley(11));
  EXPECT_EQ(r.cert.density, Rational(10, 121));
  EXPECT_LE(r.cert.alpha, 2 * std::sqrt(11.0) + 1);
  EXPECT_EQ(r.degree, 10U);
  EXPECT_EQ(r.cert.provenance, CertProvenance::kEigenvalue);
}

TEST(Jumbled, CycleAndIrregular) {
  const auto r = jumbled_cert(cycle_graph(5));
  EXPECT_EQ(r.cert.density, Rational(2, 5));
  EXPECT_NEAR(r.cert.alpha, nontrivial_abs_max(spectrum_dense(cycle_graph(5)).eigenvalues), 1e-12);
  expect_code(ErrorCode::kIrregular, [] { jumbled_cert(ak_graph(2, Field::make(5, 1))); });
}

TEST(Weil, Examples) {
  EXPECT_LE(weil_audit(5).max_abs, 2 * std::sqrt(5.0));
  EXPECT_TRUE(weil_audit(5).holds);
  EXPECT_LE(weil_audit(7).max_abs, 2 * std::sqrt(7.0));
  for (std::uint32_t a1 = 1; a1 < 7; ++a1) EXPECT_LT(std::abs(cubic_character_sum(7, a1, 0)), 1e-9);
  expect_code(ErrorCode::kBadCharacteristic, [] { weil_audit(3); });
}

TEST(Weil, HoldsUpToTwoHundred) {
  for (std::uint32_t p = 5; p < 200; ++p) {
    if (is_prime(p)) EXPECT_TRUE(weil_audit(p).holds) << p;
  }
}

}  // namespace
}  // namespace pseudoturan
