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

#include "pseudoturan/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pseudoturan/random.hpp"

namespace pseudoturan {

std::size_t CayleySpec::group_order() const {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

std::size_t CayleySpec::index_of(std::span<const std::uint32_t> element) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + element[i];
  return idx;
}

std::vector<std::uint32_t> CayleySpec::element_at(std::size_t index) const {
  std::vector<std::uint32_t> out(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % dims[i]);
    index /= dims[i];
  }
  return out;
}

void validate(const CayleySpec& spec) {
  if (spec.dims.empty()) fail(ErrorCode::kInvalidArgument, "empty group");
  for (auto d : spec.dims) {
    if (d < 1) fail(ErrorCode::kInvalidArgument, "group factor of order 0");
  }
  std::set<std::vector<std::uint32_t>> members;
  for (const auto& s : spec.connection) {
    if (s.size() != spec.dims.size()) {
      fail(ErrorCode::kDimensionMismatch, "connection element arity");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= spec.dims[i]) {
        fail(ErrorCode::kInvalidArgument, "connection element not reduced");
      }
    }
    if (std::all_of(s.begin(), s.end(), [](auto c) { return c == 0; })) {
      fail(ErrorCode::kIdentityInSet, "identity in connection set");
    }
    members.insert(s);
  }
  for (const auto& s : members) {
    std::vector<std::uint32_t> inv(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      inv[i] = (spec.dims[i] - s[i]) % spec.dims[i];
    }
    if (!members.contains(inv)) {
      std::string text;
      for (auto c : inv) text += (text.empty() ? "(" : ",") + std::to_string(c);
      fail(ErrorCode::kAsymmetricSet, "missing inverse " + text + ")");
    }
  }
}

Graph cayley_graph(const CayleySpec& spec) {
  validate(spec);
  const std::size_t n = spec.group_order();
  if (n > kMaxConstructionVertices) {
    fail(ErrorCode::kTooLarge, "group order " + std::to_string(n));
  }
  const std::size_t k = spec.dims.size();
  GraphBuilder b(n);
  std::vector<std::uint32_t> w(k);
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto el = spec.element_at(v);
    labels[v] = encode_coords(el);
    for (const auto& s : spec.connection) {
      for (std::size_t i = 0; i < k; ++i) w[i] = (el[i] + s[i]) % spec.dims[i];
      const auto u = spec.index_of(w);
      if (u > v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(u));
    }
  }
  b.set_labels(std::move(labels), "cayley");
  return std::move(b).build();
}

CayleySpec cubic_cayley_spec(std::uint32_t p) {
  if (!is_prime(p) || p == 3) {
    fail(ErrorCode::kBadCharacteristic,
         "cubic Cayley graph needs a prime p != 3, got " + std::to_string(p));
  }
  CayleySpec spec{{p, p}, {}};
  for (std::uint64_t x = 1; x < p; ++x) {
    spec.connection.push_back(
        {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(x * x % p * x % p)});
  }
  return spec;
}

Graph cubic_cayley(std::uint32_t p) { return cayley_graph(cubic_cayley_spec(p)); }

std::vector<FieldElement> kopparty_trace_set(const Field& field) {
  const std::uint32_t p = field.characteristic();
  std::vector<FieldElement> t;
  for (std::uint32_t c = 0; c < field.order(); ++c) {
    const auto tr = field.trace({c});
    if (tr == 1 || tr == p - 1) t.push_back({c});
  }
  return t;
}

CayleySpec kopparty_spec(const Field& field) {
  const std::uint32_t p = field.characteristic();
  const std::uint32_t h = field.degree();
  if (p == 3) fail(ErrorCode::kBadCharacteristic, "Kopparty graph needs p != 3");
  CayleySpec spec;
  spec.dims.assign(3 * h, p);
  std::set<std::vector<std::uint32_t>> s;
  for (auto x : kopparty_trace_set(field)) {
    for (std::uint32_t yc = 1; yc < field.order(); ++yc) {
      const FieldElement y{yc};
      const auto a = field.mul(x, y);
      const auto b = field.mul(a, y);
      const auto c = field.mul(b, y);
      std::vector<std::uint32_t> el;
      for (auto e : {a, b, c}) {
        const auto co = field.coeffs(e);
        el.insert(el.end(), co.begin(), co.end());
      }
      s.insert(std::move(el));
    }
  }
  spec.connection.assign(s.begin(), s.end());
  return spec;
}

Graph kopparty(std::uint32_t p, std::uint32_t h) {
  if (!is_prime(p) || p == 3) {
    fail(ErrorCode::kBadCharacteristic,
         "Kopparty graph needs a prime p != 3, got " + std::to_string(p));
  }
  const Field field = Field::make(p, h);
  const auto spec = kopparty_spec(field);
  Graph g = cayley_graph(spec);
  // Relabel by field-element triples rather than raw digits.
  std::vector<std::string> labels(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    const auto digits = spec.element_at(v);
    std::vector<std::uint32_t> triple(3);
    for (std::uint32_t j = 0; j < 3; ++j) {
      triple[j] = field.from_coeffs(std::span(digits).subspan(j * h, h)).code;
    }
    labels[v] = encode_coords(triple);
  }
  GraphBuilder b(g.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  b.set_labels(std::move(labels), "cayley");
  return std::move(b).build();
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::kAbsolute: return "absolute";
    case PointClass::kSquare: return "square";
    case PointClass::kNonsquare: return "nonsquare";
  }
  return "?";
}

FieldElement dot(const Field& field, std::span<const FieldElement> a,
                 std::span<const FieldElement> b) {
  if (a.size() != b.size()) fail(ErrorCode::kDimensionMismatch, "dot product");
  FieldElement acc = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = field.add(acc, field.mul(a[i], b[i]));
  return acc;
}

PointClass classify(const Field& field, std::span<const FieldElement> x) {
  switch (field.quad_char(dot(field, x, x))) {
    case 0: return PointClass::kAbsolute;
    case 1: return PointClass::kSquare;
    default: return PointClass::kNonsquare;
  }
}

std::vector<FieldElement> canonicalize(const Field& field,
                                       std::span<const FieldElement> x) {
  auto lead = std::find_if(x.begin(), x.end(), [](auto e) { return e.code != 0; });
  if (lead == x.end()) fail(ErrorCode::kInvalidArgument, "zero vector");
  const auto scale = field.inv(*lead);
  std::vector<FieldElement> out;
  out.reserve(x.size());
  for (auto e : x) out.push_back(field.mul(e, scale));
  return out;
}

std::vector<ProjectivePoint> projective_points(std::uint32_t r,
                                               const Field& field) {
  if (r < 1) fail(ErrorCode::kInvalidArgument, "projective dimension r >= 1");
  if (!field.is_odd()) {
    fail(ErrorCode::kEvenCharacteristic, "point classification needs odd q");
  }
  const std::uint32_t t = r + 1;
  const std::uint64_t q = field.order();
  std::uint64_t total = 0, pw = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    total += pw;
    pw *= q;
    if (total > kMaxConstructionVertices * 4) {
      fail(ErrorCode::kTooLarge, "too many projective points");
    }
  }
  std::vector<ProjectivePoint> points;
  points.reserve(total);
  for (std::uint32_t lead = 0; lead < t; ++lead) {
    const std::uint32_t free = t - 1 - lead;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      ProjectivePoint pt;
      pt.coords.assign(t, field.zero());
      pt.coords[lead] = field.one();
      std::uint64_t rest = idx;
      for (std::uint32_t i = t; i-- > lead + 1;) {
        pt.coords[i] = {static_cast<std::uint32_t>(rest % q)};
        rest /= q;
      }
      pt.cls = classify(field, pt.coords);
      points.push_back(std::move(pt));
    }
  }
  return points;
}

std::string encode_coords(std::span<const std::uint32_t> coords) {
  std::string out;
  out.reserve(coords.size() * 4);
  for (auto c : coords) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((c >> (8 * i)) & 0xFF));
  }
  return out;
}

std::vector<std::uint32_t> decode_coords(const std::string& label) {
  if (label.size() % 4 != 0) fail(ErrorCode::kMissingLabels, "bad coordinate label");
  std::vector<std::uint32_t> out(label.size() / 4);
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::uint32_t c = 0;
    for (int i = 0; i < 4; ++i) {
      c |= std::uint32_t{static_cast<unsigned char>(label[4 * j + i])} << (8 * i);
    }
    out[j] = c;
  }
  return out;
}

std::string encode_label(const ProjectivePoint& point) {
  std::vector<std::uint32_t> codes;
  for (auto e : point.coords) codes.push_back(e.code);
  const char tag = point.cls == PointClass::kAbsolute ? '0'
                   : point.cls == PointClass::kSquare ? 'S'
                                                      : 'N';
  return std::string(1, tag) + encode_coords(codes);
}

ProjectivePoint decode_projective_label(const std::string& label) {
  if (label.empty()) fail(ErrorCode::kMissingLabels, "empty projective label");
  ProjectivePoint pt;
  switch (label[0]) {
    case '0': pt.cls = PointClass::kAbsolute; break;
    case 'S': pt.cls = PointClass::kSquare; break;
    case 'N': pt.cls = PointClass::kNonsquare; break;
    default: fail(ErrorCode::kMissingLabels, "unknown point tag");
  }
  for (auto c : decode_coords(label.substr(1))) pt.coords.push_back({c});
  return pt;
}

Graph ak_graph(std::uint32_t r, const Field& field) {
  auto points = projective_points(r, field);
  std::erase_if(points, [](const auto& pt) { return pt.cls == PointClass::kAbsolute; });
  const std::size_t n = points.size();
  if (n > kMaxConstructionVertices) {
    fail(ErrorCode::kTooLarge, "AK graph with " + std::to_string(n) + " vertices");
  }
  const std::size_t t = r + 1;
  std::vector<std::uint32_t> flat(n * t);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < t; ++i) flat[v * t + i] = points[v].coords[i].code;
  }
  GraphBuilder b(n);
  const std::uint64_t p = field.characteristic();
  const bool prime = field.degree() == 1;
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint32_t* xu = &flat[u * t];
    auto row = b.row(static_cast<Vertex>(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::uint32_t* xv = &flat[v * t];
      bool orthogonal;
      if (prime) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < t; ++i) acc += std::uint64_t{xu[i]} * xv[i];
        orthogonal = acc % p == 0;
      } else {
        FieldElement acc = field.zero();
        for (std::size_t i = 0; i < t; ++i) {
          acc = field.add(acc, field.mul({xu[i]}, {xv[i]}));
        }
        orthogonal = acc.code == 0;
      }
      if (orthogonal) row[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
  }
  // Mirror the upper triangle.
  for (std::size_t u = 0; u < n; ++u) {
    const auto row = b.row(static_cast<Vertex>(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      if ((row[v / kWordBits] >> (v % kWordBits)) & 1U) {
        b.row(static_cast<Vertex>(v))[u / kWordBits] |= Word{1} << (u % kWordBits);
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& pt : points) labels.push_back(encode_label(pt));
  b.set_labels(std::move(labels), "projective");
  return std::move(b).build();
}

Graph nonsquare_subgraph(const Graph& ak) {
  if (ak.label_scheme() != "projective" || !ak.has_labels()) {
    fail(ErrorCode::kMissingLabels, "graph lacks projective point labels");
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < ak.n(); ++v) {
    if (decode_projective_label(ak.label(v)).cls == PointClass::kNonsquare) {
      keep.push_back(v);
    }
  }
  return induced(ak, keep);
}

DenseVertex dense_vertex(const Graph& g, std::span<const Vertex> v1) {
  if (v1.empty()) fail(ErrorCode::kEmptySet, "V1 is empty");
  Bitset members(g.n());
  for (auto v : v1) {
    if (v >= g.n()) fail(ErrorCode::kVertexOutOfRange, std::to_string(v));
    if (g.degree(v) == 0) {
      fail(ErrorCode::kIsolatedVertexInV1, "vertex " + std::to_string(v));
    }
    members.set(v);
  }
  DenseVertex best;
  bool have = false;
  std::uint64_t best_num = 0, best_den = 1;
  members.for_each([&](Vertex v) {
    const std::uint64_t num = members.count_and(g.row(v));
    const std::uint64_t den = g.degree(v);
    if (!have || num * best_den > best_num * den) {
      have = true;
      best_num = num;
      best_den = den;
      best.vertex = v;
    }
  });
  best.ratio = Rational(static_cast<std::int64_t>(best_num),
                        static_cast<std::int64_t>(best_den));
  return best;
}

EvenTConstruction even_t_construction(std::uint32_t t, const Field& field) {
  if (t < 2 || t % 2 != 0) {
    fail(ErrorCode::kInvalidArgument,
         "even_t_construction needs an even t; odd t uses nonsquare_subgraph");
  }
  const Graph ak = ak_graph(t, field);
  std::vector<Vertex> nonsquares;
  for (Vertex v = 0; v < ak.n(); ++v) {
    if (decode_projective_label(ak.label(v)).cls == PointClass::kNonsquare) {
      nonsquares.push_back(v);
    }
  }
  const auto choice = dense_vertex(ak, nonsquares);
  Bitset u = ak.neighbor_set(choice.vertex);
  Bitset v1(ak.n(), nonsquares);
  u &= v1;
  return {induced(ak, u), choice.vertex, choice.ratio, ak.n()};
}

Graph distance_graph(const Field& field) {
  if (!field.is_odd()) fail(ErrorCode::kEvenCharacteristic, "distance graph needs odd q");
  const std::uint32_t q = field.order();
  const std::size_t n = std::size_t{q} * q;
  if (n > kMaxConstructionVertices) fail(ErrorCode::kTooLarge, "distance graph");
  std::vector<std::pair<FieldElement, FieldElement>> circle;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t c = 0; c < q; ++c) {
      const auto s = field.add(field.mul({a}, {a}), field.mul({c}, {c}));
      if (s == field.one()) circle.emplace_back(FieldElement{a}, FieldElement{c});
    }
  }
  GraphBuilder b(n);
  std::vector<std::string> labels(n);
  for (std::uint32_t x1 = 0; x1 < q; ++x1) {
    for (std::uint32_t x2 = 0; x2 < q; ++x2) {
      const std::size_t v = std::size_t{x1} * q + x2;
      const std::uint32_t coords[] = {x1, x2};
      labels[v] = encode_coords(coords);
      for (auto [a, c] : circle) {
        const std::size_t w = std::size_t{field.add({x1}, a).code} * q + field.add({x2}, c).code;
        if (w > v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(w));
      }
    }
  }
  b.set_labels(std::move(labels), "plane");
  return std::move(b).build();
}

FieldElement determinant(const Field& field,
                         std::vector<std::vector<FieldElement>> m) {
  const std::size_t n = m.size();
  FieldElement det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].code == 0) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = field.neg(det);
    }
    det = field.mul(det, m[col][col]);
    const auto inv = field.inv(m[col][col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const auto factor = field.mul(m[row][col], inv);
      if (factor.code == 0) continue;
      for (std::size_t k = col; k < n; ++k) {
        m[row][k] = field.sub(m[row][k], field.mul(factor, m[col][k]));
      }
    }
  }
  return det;
}

std::vector<FieldElement> cross_product(
    const Field& field, std::span<const std::vector<FieldElement>> vectors) {
  const std::size_t t = vectors.size() + 1;
  if (t < 2) fail(ErrorCode::kDimensionMismatch, "need at least one vector");
  for (const auto& v : vectors) {
    if (v.size() != t) {
      fail(ErrorCode::kDimensionMismatch, "cross product takes t-1 vectors in F^t");
    }
  }
  std::vector<FieldElement> out(t);
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<std::vector<FieldElement>> minor;
    for (const auto& v : vectors) {
      std::vector<FieldElement> row;
      for (std::size_t k = 0; k < t; ++k) {
        if (k != j) row.push_back(v[k]);
      }
      minor.push_back(std::move(row));
    }
    const auto d = determinant(field, std::move(minor));
    out[j] = j % 2 == 0 ? d : field.neg(d);
  }
  return out;
}

Graph random_graph(std::size_t n, const Rational& density, std::uint64_t seed) {
  if (density < Rational(0) || density > Rational(1)) {
    fail(ErrorCode::kInvalidArgument, "density must lie in [0, 1]");
  }
  GraphBuilder b(n);
  std::mt19937_64 rng(derive_seed(seed, 0x6e70));
  const long double p = static_cast<long double>(density.numerator()) /
                        static_cast<long double>(density.denominator());
  const bool always = density == Rational(1);
  const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0L);
  for (Vertex u = 0; u < n; ++u) {
    auto row = b.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (always || rng() < threshold) row[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    const auto row = b.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if ((row[v / kWordBits] >> (v % kWordBits)) & 1U) {
        b.row(v)[u / kWordBits] |= Word{1} << (u % kWordBits);
      }
    }
  }
  return std::move(b).build();
}

}  // namespace pseudoturan
