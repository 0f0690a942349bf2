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

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/spectral.hpp"

namespace pseudoturan {
namespace {

// Dense eigensolves up to n = 4096 take minutes on one core, hence a
// separate binary.

TEST(SpectrumSlow, CubicCayleyCharacterSumMatchesDenseAndBound) {
  for (std::uint32_t p = 5; p <= 61; ++p) {
    if (!is_prime(p)) continue;
    const auto spec = cubic_cayley_spec(p);
    const auto exact = cayley_spectrum(spec);
    EXPECT_LT(exact.max_imaginary, 1e-9) << p;
    const auto dense = spectrum_dense(cayley_graph(spec));
    EXPECT_TRUE(same_spectrum(exact.eigenvalues, dense.eigenvalues, 1e-8)) << p;
    EXPECT_LE(dense.lambda, 2 * std::sqrt(static_cast<double>(p)) + 1) << p;
  }
}

TEST(SpectrumSlow, KoppartyCharacterSumMatchesDense) {
  for (auto [p, h] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}) {
    const auto spec = kopparty_spec(Field::make(p, h));
    const auto exact = cayley_spectrum(spec);
    EXPECT_LT(exact.max_imaginary, 1e-9);
    EXPECT_TRUE(same_spectrum(exact.eigenvalues, spectrum_dense(cayley_graph(spec)).eigenvalues, 1e-8))
        << p << "^" << h;
  }
}

}  // namespace
}  // namespace pseudoturan
