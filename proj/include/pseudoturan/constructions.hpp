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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pseudoturan/errors.hpp"
#include "pseudoturan/field.hpp"
#include "pseudoturan/graph.hpp"

namespace pseudoturan {

// Constructions refuse to materialize adjacency for more vertices than this.
inline constexpr std::size_t kMaxConstructionVertices = std::size_t{1} << 15;

// Abelian group Z_{n_1} + ... + Z_{n_k} with a connection set S.
struct CayleySpec {
  std::vector<std::uint32_t> dims;
  std::vector<std::vector<std::uint32_t>> connection;

  std::size_t group_order() const;
  // Row-major: the last coordinate varies fastest.
  std::size_t index_of(std::span<const std::uint32_t> element) const;
  std::vector<std::uint32_t> element_at(std::size_t index) const;
};

// Throws AsymmetricSet, IdentityInSet or DimensionMismatch.
void validate(const CayleySpec& spec);

Graph cayley_graph(const CayleySpec& spec);

// Z_p^2 with S = {(x, x^3) : x != 0}.
CayleySpec cubic_cayley_spec(std::uint32_t p);
Graph cubic_cayley(std::uint32_t p);

// (F_q^3, +) viewed as Z_p^{3h}; S = {(xy, xy^2, xy^3) : Tr(x) = +-1, y != 0}.
CayleySpec kopparty_spec(const Field& field);
Graph kopparty(std::uint32_t p, std::uint32_t h);
// Trace set T = {x : Tr(x) in {1, -1}}.
std::vector<FieldElement> kopparty_trace_set(const Field& field);

enum class PointClass { kAbsolute, kSquare, kNonsquare };

std::string to_string(PointClass c);

struct ProjectivePoint {
  std::vector<FieldElement> coords;  // first nonzero coordinate is 1
  PointClass cls = PointClass::kAbsolute;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

FieldElement dot(const Field& field, std::span<const FieldElement> a,
                 std::span<const FieldElement> b);
PointClass classify(const Field& field, std::span<const FieldElement> x);
// Scales so that the first nonzero coordinate is 1.
std::vector<FieldElement> canonicalize(const Field& field,
                                       std::span<const FieldElement> x);

// All points of PG(r, q), i.e. classes of nonzero vectors in F_q^{r+1}.
std::vector<ProjectivePoint> projective_points(std::uint32_t r,
                                               const Field& field);

std::string encode_label(const ProjectivePoint& point);
ProjectivePoint decode_projective_label(const std::string& label);
std::string encode_coords(std::span<const std::uint32_t> coords);
std::vector<std::uint32_t> decode_coords(const std::string& label);

// Non-absolute points of PG(r, q), adjacent iff orthogonal.
Graph ak_graph(std::uint32_t r, const Field& field);

// Induced subgraph on the nonsquare-tagged vertices of an ak_graph.
Graph nonsquare_subgraph(const Graph& ak);

struct DenseVertex {
  Vertex vertex = 0;
  Rational ratio{0};  // |N(v) & V1| / |N(v)|
};

DenseVertex dense_vertex(const Graph& g, std::span<const Vertex> v1);

struct EvenTConstruction {
  Graph graph;
  Vertex center = 0;  // index in ak_graph(t, q)
  Rational ratio{0};
  std::size_t ambient_vertices = 0;
};

// Induced subgraph of AK(t, q) on N(v) & nonsquares for the densest
// nonsquare v.
EvenTConstruction even_t_construction(std::uint32_t t, const Field& field);

// Points of F_q^2 adjacent iff (x1-y1)^2 + (x2-y2)^2 = 1.
Graph distance_graph(const Field& field);

// Cofactor expansion along an appended top row of basis vectors; takes t-1
// vectors of length t.
std::vector<FieldElement> cross_product(
    const Field& field, std::span<const std::vector<FieldElement>> vectors);
FieldElement determinant(const Field& field,
                         std::vector<std::vector<FieldElement>> matrix);

// G(n, p) with a fixed seed.
Graph random_graph(std::size_t n, const Rational& density, std::uint64_t seed);

}  // namespace pseudoturan
