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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pseudoturan/bitset.hpp"
#include "pseudoturan/errors.hpp"

namespace pseudoturan {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Immutable simple graph with one adjacency bitset row per vertex.
///
/// Vertex labels are opaque byte strings whose encoding is owned by the
/// construction that produced the graph; `label_scheme()` names it
/// ("cayley", "projective", "plane", or empty).
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t words_per_row() const { return stride_; }

  std::span<const Word> row(Vertex v) const {
    return {adj_.data() + std::size_t{v} * stride_, stride_};
  }
  bool adjacent(Vertex u, Vertex v) const {
    return (adj_[std::size_t{u} * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const;
  Bitset neighbor_set(Vertex v) const { return Bitset(n_, row(v)); }
  // Sorted lexicographically with u < v.
  std::vector<Edge> edges() const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  std::optional<std::size_t> regular_degree() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label_scheme() const { return label_scheme_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Word> adj_;
  std::vector<std::uint32_t> degrees_;
  std::vector<std::string> labels_;
  std::string label_scheme_;
};

// Mutable staging area used by constructions; `build` freezes it.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t n() const { return n_; }
  // Idempotent; rejects loops and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::span<Word> row(Vertex v) {
    return {adj_.data() + std::size_t{v} * stride_, stride_};
  }
  void set_labels(std::vector<std::string> labels, std::string scheme);

  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<Word> adj_;
  std::vector<std::string> labels_;
  std::string label_scheme_;
};

// Result vertex order follows ascending order of `vertices`; labels carry over.
Graph induced(const Graph& g, std::span<const Vertex> vertices);
Graph induced(const Graph& g, const Bitset& vertices);

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

// Vertex i is the pattern label i+1 of the 3-regular drawing used in the
// Petersen embedding pipeline.
Graph petersen_pattern();
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph empty_graph(std::size_t n);

enum class EmbedMode { kSubgraph, kInduced };

struct Embedding {
  std::vector<Vertex> map;  // pattern vertex -> host vertex

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Injective, edge-preserving and, in induced mode, non-edge-preserving.
bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const Embedding& embedding,
                        EmbedMode mode = EmbedMode::kSubgraph);

enum class CertProvenance { kEigenvalue, kSampledLowerBound };

struct JumbledCert {
  Rational density{0};
  double alpha = 0.0;
  CertProvenance provenance = CertProvenance::kEigenvalue;
};

std::string to_string(CertProvenance p);

// Largest |e(X,Y) - p|X||Y|| / sqrt(|X||Y|) over `trials` random disjoint
// pairs (X, Y) with log-uniform sizes in [1, n/2]. Trial t draws from its own
// stream derived from (seed, t).
double sample_discrepancy(const Graph& g, const Rational& density,
                          std::size_t trials, std::uint64_t seed);

// e(X, Y) counting ordered incidences; X and Y are expected disjoint.
std::size_t edges_between(const Graph& g, const Bitset& x, const Bitset& y);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

}  // namespace pseudoturan
