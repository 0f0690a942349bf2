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

#include "pseudoturan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "pseudoturan/random.hpp"

namespace pseudoturan {

GraphBuilder::GraphBuilder(std::size_t n)
    : n_(n), stride_(words_for(n)), adj_(n * words_for(n), 0) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    fail(ErrorCode::kVertexOutOfRange,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u == v) fail(ErrorCode::kLoopEdge, "loop at " + std::to_string(u));
  adj_[std::size_t{u} * stride_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  adj_[std::size_t{v} * stride_ + u / kWordBits] |= Word{1} << (u % kWordBits);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  return (adj_[std::size_t{u} * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
}

void GraphBuilder::set_labels(std::vector<std::string> labels,
                              std::string scheme) {
  if (!labels.empty() && labels.size() != n_) {
    fail(ErrorCode::kInvalidArgument, "label count differs from vertex count");
  }
  labels_ = std::move(labels);
  label_scheme_ = std::move(scheme);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.stride_ = stride_;
  g.adj_ = std::move(adj_);
  g.labels_ = std::move(labels_);
  g.label_scheme_ = std::move(label_scheme_);
  g.degrees_.resize(n_);
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    std::size_t d = 0;
    for (std::size_t w = 0; w < stride_; ++w) {
      d += std::popcount(g.adj_[v * stride_ + w]);
    }
    g.degrees_[v] = static_cast<std::uint32_t>(d);
    twice += d;
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  return neighbor_set(v).to_vector();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    const Bitset r(n_, row(u));
    for (std::size_t v = r.next(u + 1); v < n_; v = r.next(v + 1)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

std::size_t Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  return min_degree() == max_degree() ? std::optional(min_degree()) : std::nullopt;
}

Graph induced(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (auto v : keep) {
    if (v >= g.n()) fail(ErrorCode::kVertexOutOfRange, std::to_string(v));
  }
  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (auto v : keep) labels.push_back(g.label(v));
    b.set_labels(std::move(labels), g.label_scheme());
  } else {
    b.set_labels({}, g.label_scheme());
  }
  return std::move(b).build();
}

Graph induced(const Graph& g, const Bitset& vertices) {
  const auto members = vertices.to_vector();
  return induced(g, members);
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.n() || v >= g.n()) {
    fail(ErrorCode::kVertexOutOfRange, "common_neighbors");
  }
  Bitset s = g.neighbor_set(u);
  s &= g.row(v);
  return s.to_vector();
}

Graph petersen_pattern() {
  static constexpr std::pair<int, int> kEdges[] = {
      {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7},  {3, 8},  {4, 9},
      {4, 10}, {5, 7}, {5, 10}, {6, 8}, {6, 9}, {7, 9}, {8, 10}};
  std::vector<Edge> edges;
  for (auto [a, b] : kEdges) {
    edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  }
  return Graph::from_edges(10, edges);
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder builder(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) builder.add_edge(u, static_cast<Vertex>(a + v));
  }
  return std::move(builder).build();
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const Embedding& embedding, EmbedMode mode) {
  const auto& map = embedding.map;
  if (map.size() != pattern.n()) return false;
  for (auto v : map) {
    if (v >= host.n()) return false;
  }
  std::vector<Vertex> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (Vertex i = 0; i < pattern.n(); ++i) {
    for (Vertex j = i + 1; j < pattern.n(); ++j) {
      const bool want = pattern.adjacent(i, j);
      const bool have = host.adjacent(map[i], map[j]);
      if (want && !have) return false;
      if (mode == EmbedMode::kInduced && !want && have) return false;
    }
  }
  return true;
}

std::string to_string(CertProvenance p) {
  return p == CertProvenance::kEigenvalue ? "eigenvalue-derived"
                                          : "sampled-lower-bound";
}

std::size_t edges_between(const Graph& g, const Bitset& x, const Bitset& y) {
  std::size_t total = 0;
  x.for_each([&](Vertex v) { total += y.count_and(g.row(v)); });
  return total;
}

double sample_discrepancy(const Graph& g, const Rational& density,
                          std::size_t trials, std::uint64_t seed) {
  if (trials == 0) fail(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const std::size_t n = g.n();
  if (n < 2) return 0.0;
  const double p = to_double(density);
  const std::size_t max_size = std::max<std::size_t>(1, n / 2);
  const double log_span = std::log(static_cast<double>(max_size) + 1.0);

  std::vector<Vertex> perm(n);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw_size = [&] {
      const auto s = static_cast<std::size_t>(std::exp(unit(rng) * log_span));
      return std::clamp<std::size_t>(s, 1, max_size);
    };
    const std::size_t sx = draw_size();
    const std::size_t sy = draw_size();

    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t i = 0; i < sx + sy; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(perm[i], perm[pick(rng)]);
    }
    Bitset x(n), y(n);
    for (std::size_t i = 0; i < sx; ++i) x.set(perm[i]);
    for (std::size_t i = sx; i < sx + sy; ++i) y.set(perm[i]);

    const double e = static_cast<double>(edges_between(g, x, y));
    const double prod = static_cast<double>(sx) * static_cast<double>(sy);
    worst = std::max(worst, std::abs(e - p * prod) / std::sqrt(prod));
  }
  return worst;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# n=" << g.n() << '\n';
  if (!g.label_scheme().empty()) {
    out << "# label-scheme=" << g.label_scheme() << '\n';
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIoError, "cannot open " + path.string());
  write_edge_list(g, out);
  if (!out) fail(ErrorCode::kIoError, "write failed: " + path.string());
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::kMalformedLine, "missing header");
  static constexpr std::string_view kHeader = "# n=";
  if (line.rfind(kHeader, 0) != 0) {
    fail(ErrorCode::kMalformedLine, "line 1: expected '# n=<n>'");
  }
  std::size_t n = 0;
  {
    std::istringstream hs(line.substr(kHeader.size()));
    if (!(hs >> n) || !(hs >> std::ws).eof()) {
      fail(ErrorCode::kMalformedLine, "line 1: bad vertex count");
    }
  }
  GraphBuilder b(n);
  std::string scheme;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      static constexpr std::string_view kScheme = "# label-scheme=";
      if (line.rfind(kScheme, 0) == 0) scheme = line.substr(kScheme.size());
      continue;
    }
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || !(ls >> std::ws).eof()) {
      fail(ErrorCode::kMalformedLine, "line " + std::to_string(lineno));
    }
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      fail(ErrorCode::kMalformedLine,
           "line " + std::to_string(lineno) + ": vertex out of range");
    }
    if (u >= v) {
      fail(ErrorCode::kMalformedLine,
           "line " + std::to_string(lineno) + ": expected u < v");
    }
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  b.set_labels({}, scheme);
  return std::move(b).build();
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIoError, "cannot open " + path.string());
  return read_edge_list(in);
}

}  // namespace pseudoturan
