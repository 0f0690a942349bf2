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

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/graph.hpp"

namespace pseudoturan {

inline constexpr std::size_t kDenseCap = 4096;

enum class SpectralMethod { kCharacterSum, kDenseNumeric, kIterative };

std::string to_string(SpectralMethod m);

struct SpectralSummary {
  std::vector<double> eigenvalues;  // descending
  double lambda1 = 0.0;
  // Largest |eigenvalue| after dropping the top one.
  double lambda = 0.0;
  SpectralMethod method = SpectralMethod::kDenseNumeric;
  double tolerance = 0.0;
  double max_imaginary = 0.0;  // character sums only
};

// Eigenvalues of Cay(H, S) as the character sums sum_{s in S} psi_a(s).
SpectralSummary cayley_spectrum(const CayleySpec& spec);

// Full adjacency spectrum; throws TooLarge above `cap` vertices.
SpectralSummary spectrum_dense(const Graph& g, std::size_t cap = kDenseCap);

// Regular graphs: max_{i >= 2} |lambda_i|. Otherwise the largest singular
// value of A - (2e/n^2) J. Above `dense_cap` vertices the value comes from
// Lanczos iteration on the same deflated operator.
double lambda_nontrivial(const Graph& g, std::size_t dense_cap = kDenseCap);

// Lanczos with full reorthogonalization on A - (2e/n^2) J.
double lambda_iterative(const Graph& g, double tol = 1e-7,
                        std::size_t max_iterations = 10000);

// Largest |.| over all but the first entry of a descending spectrum.
double nontrivial_abs_max(const std::vector<double>& descending);

// Multiset equality of two descending spectra within `tol`.
bool same_spectrum(const std::vector<double>& a, const std::vector<double>& b,
                   double tol);

struct JumbledReport {
  JumbledCert cert;
  std::size_t degree = 0;
  double optimality_ratio = 0.0;  // lambda / sqrt(d)
};

// (d/n, lambda) for a regular graph; Irregular otherwise.
JumbledReport jumbled_cert(const Graph& g);

std::complex<double> cubic_character_sum(std::uint32_t p, std::uint32_t a1,
                                         std::uint32_t a2);

struct WeilAudit {
  std::uint32_t p = 0;
  double max_abs = 0.0;
  std::uint32_t arg_a1 = 0;
  std::uint32_t arg_a2 = 0;
  double bound = 0.0;  // 2 sqrt(p)
  bool holds = false;
};

// max over (a1, a2) != 0 of |sum_x omega_p^{a1 x + a2 x^3}|.
WeilAudit weil_audit(std::uint32_t p);

}  // namespace pseudoturan
