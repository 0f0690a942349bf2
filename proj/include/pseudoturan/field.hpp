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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pseudoturan {

bool is_prime(std::uint64_t n);

// An element of GF(p^h) in the polynomial basis. `code` packs the
// coordinates c_0 + c_1 p + ... + c_{h-1} p^{h-1}; prime-subfield residues
// therefore have code equal to the residue itself.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Finite field GF(p^h) with a fixed polynomial-basis representation.
///
/// Multiplication goes through discrete log tables built from a primitive
/// element at construction; `mul_poly` is the schoolbook reference path the
/// tables are derived from. Instances are immutable after `make`.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // Selects the lexicographically smallest monic irreducible modulus when
  // `modulus` is absent. Coefficients are listed constant term first.
  static Field make(std::uint32_t p, std::uint32_t h = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = {});

  // Accepts any prime power q.
  static Field of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return h_; }
  std::uint32_t order() const { return q_; }
  bool is_odd() const { return p_ != 2; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t code) const;
  // Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t v) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> c) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement mul_poly(FieldElement a, FieldElement b) const;

  // Absolute trace a + a^p + ... + a^{p^{h-1}}, as a residue in [0, p).
  std::uint32_t trace(FieldElement a) const;
  // Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
  int quad_char(FieldElement a) const;

  // e.g. "GF(9) = GF(3)[x]/(x^2+1)".
  std::string describe() const;

 private:
  Field() = default;
  void build_tables();

  std::uint32_t p_ = 2;
  std::uint32_t h_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i < h
  std::vector<std::uint32_t> exp_;    // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;  // q*q entries when q <= 1024
  std::vector<std::uint32_t> neg_;
};

// Polynomial helpers over GF(p), coefficient vectors constant term first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p,
                                                std::uint32_t h);

}  // namespace pseudoturan
