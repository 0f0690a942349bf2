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

#include "pseudoturan/field.hpp"

#include <algorithm>
#include <sstream>

#include "pseudoturan/errors.hpp"

namespace pseudoturan {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small, so Fermat is fine.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo g over GF(p); g need not be monic.
Poly poly_mod(Poly a, const Poly& g, std::uint32_t p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (a.size() >= g.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = c * g[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() <= 2) return f.size() == 2;  // constants are not irreducible
  const std::size_t h = f.size() - 1;
  for (std::size_t d = 1; d <= h / 2; ++d) {
    // Enumerate monic g of degree d through its lower coefficients.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p,
                                                std::uint32_t h) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < h; ++i) count *= p;
  // Lexicographic on (c_{h-1}, ..., c_0) is numeric order of the packed code.
  Poly f(h + 1, 0);
  f[h] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < h; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::kReducible, "no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, std::uint32_t h,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (p < 2 || h < 1) {
    fail(ErrorCode::kInvalidArgument, "field requires p >= 2 and h >= 1");
  }
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p));
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      fail(ErrorCode::kTooLarge, "field order exceeds 2^20");
    }
  }
  Field f;
  f.p_ = p;
  f.h_ = h;
  f.q_ = static_cast<std::uint32_t>(q);
  if (h == 1) {
    f.modulus_ = {0, 1};
  } else if (modulus) {
    if (modulus->size() != h + 1 || modulus->back() != 1) {
      fail(ErrorCode::kDegreeMismatch,
           "modulus must be monic with h+1 coefficients");
    }
    for (auto c : *modulus) {
      if (c >= p) fail(ErrorCode::kInvalidArgument, "modulus coefficient >= p");
    }
    if (!is_irreducible(*modulus, p)) {
      fail(ErrorCode::kReducible, "modulus is reducible over GF(p)");
    }
    f.modulus_ = *modulus;
  } else {
    f.modulus_ = smallest_irreducible(p, h);
  }
  f.pow_p_.resize(h);
  std::uint32_t pw = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    f.pow_p_[i] = pw;
    pw *= p;
  }
  f.build_tables();
  return f;
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t h = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++h;
  }
  if (rest != 1) {
    fail(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
  }
  return make(static_cast<std::uint32_t>(p), h);
}

void Field::build_tables() {
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t out = 0, rest = a;
    for (std::uint32_t i = 0; i < h_; ++i) {
      const std::uint32_t d = rest % p_;
      rest /= p_;
      out += ((p_ - d) % p_) * pow_p_[i];
    }
    neg_[a] = out;
  }
  if (h_ > 1 && q_ <= 1024) {
    add_table_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t out = 0, ra = a, rb = b;
        for (std::uint32_t i = 0; i < h_; ++i) {
          out += ((ra % p_ + rb % p_) % p_) * pow_p_[i];
          ra /= p_;
          rb /= p_;
        }
        add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(out);
      }
    }
  }

  // Primitive element: g^((q-1)/r) != 1 for every prime r | q-1.
  const std::uint32_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [this](FieldElement a, std::uint64_t e) {
    FieldElement r = one();
    while (e > 0) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  FieldElement gen{1};
  for (std::uint32_t c = 1; c < q_; ++c) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow({c}, group / r) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = {c};
      break;
    }
  }
  exp_.assign(2 * std::size_t{group}, 0);
  log_.assign(q_, 0);
  FieldElement x = one();
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = x.code;
    exp_[i + group] = x.code;
    log_[x.code] = i;
    x = mul_poly(x, gen);
  }
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) fail(ErrorCode::kInvalidArgument, "element code out of range");
  return {code};
}

FieldElement Field::from_int(std::int64_t v) const {
  const std::int64_t r = ((v % p_) + p_) % p_;
  return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> out(h_);
  std::uint32_t rest = a.code;
  for (std::uint32_t i = 0; i < h_; ++i) {
    out[i] = rest % p_;
    rest /= p_;
  }
  return out;
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != h_) {
    fail(ErrorCode::kDimensionMismatch, "expected h coordinates");
  }
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < h_; ++i) {
    if (c[i] >= p_) fail(ErrorCode::kInvalidArgument, "coordinate >= p");
    code += c[i] * pow_p_[i];
  }
  return {code};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (h_ == 1) return {(a.code + b.code) % p_};
  if (!add_table_.empty()) return {add_table_[std::size_t{a.code} * q_ + b.code]};
  std::uint32_t out = 0, ra = a.code, rb = b.code;
  for (std::uint32_t i = 0; i < h_; ++i) {
    out += ((ra % p_ + rb % p_) % p_) * pow_p_[i];
    ra /= p_;
    rb /= p_;
  }
  return {out};
}

FieldElement Field::neg(FieldElement a) const { return {neg_[a.code]}; }

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return zero();
  return {exp_[std::size_t{log_[a.code]} + log_[b.code]]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t group = q_ - 1;
  return {exp_[(group - log_[a.code]) % group]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t group = q_ - 1;
  return {exp_[(std::uint64_t{log_[a.code]} * (e % group)) % group]};
}

FieldElement Field::mul_poly(FieldElement a, FieldElement b) const {
  if (h_ == 1) {
    return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  }
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<std::uint64_t> prod(2 * h_ - 1, 0);
  for (std::uint32_t i = 0; i < h_; ++i) {
    for (std::uint32_t j = 0; j < h_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
  }
  // Reduce using x^h = -(m_0 + ... + m_{h-1} x^{h-1}).
  for (std::size_t k = prod.size(); k-- > h_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < h_; ++i) {
      const std::uint64_t sub = c * modulus_[i] % p_;
      prod[k - h_ + i] = (prod[k - h_ + i] + p_ - sub) % p_;
    }
  }
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < h_; ++i) {
    code += static_cast<std::uint32_t>(prod[i]) * pow_p_[i];
  }
  return {code};
}

std::uint32_t Field::trace(FieldElement a) const {
  FieldElement sum = a;
  FieldElement x = a;
  for (std::uint32_t i = 1; i < h_; ++i) {
    x = pow(x, p_);
    sum = add(sum, x);
  }
  return sum.code;
}

int Field::quad_char(FieldElement a) const {
  if (!is_odd()) {
    fail(ErrorCode::kEvenCharacteristic,
         "quadratic character is undefined for even q");
  }
  if (a.code == 0) return 0;
  return log_[a.code] % 2 == 0 ? 1 : -1;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (h_ > 1) {
    os << " = GF(" << p_ << ")[x]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      const auto c = modulus_[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace pseudoturan
