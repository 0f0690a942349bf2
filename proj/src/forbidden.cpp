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

#include "pseudoturan/forbidden.hpp"

#include <algorithm>
#include <numeric>

namespace pseudoturan {

TriangleCheck is_triangle_free(const Graph& g) {
  const std::size_t n = g.n();
  Bitset common(n);
  for (Vertex a = 0; a < n; ++a) {
    const Bitset na(n, g.row(a));
    for (std::size_t b = na.next(a + 1); b < n; b = na.next(b + 1)) {
      common = na;
      common &= g.row(static_cast<Vertex>(b));
      const std::size_t c = common.next(b + 1);
      if (c < n) {
        return {false, std::array<Vertex, 3>{a, static_cast<Vertex>(b),
                                             static_cast<Vertex>(c)}};
      }
    }
  }
  return {};
}

K23Check is_k23_free(const Graph& g) {
  const std::size_t n = g.n();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (popcount_and(g.row(u), g.row(v)) >= 3) {
        Bitset common = g.neighbor_set(u);
        common &= g.row(v);
        K23Witness w{u, v, {}};
        std::size_t at = common.first();
        for (auto& c : w.common) {
          c = static_cast<Vertex>(at);
          at = common.next(at + 1);
        }
        return {false, w};
      }
    }
  }
  return {};
}

namespace {

class CliqueSolver {
 public:
  CliqueSolver(const Graph& g, std::size_t cap) : cap_(cap), n_(g.n()) {
    // Relabel by non-increasing degree so greedy coloring sees hubs first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<Vertex> rank(n_);
    for (std::size_t i = 0; i < n_; ++i) rank[order_[i]] = static_cast<Vertex>(i);
    rows_.assign(n_, Bitset(n_));
    for (Vertex v = 0; v < n_; ++v) {
      g.neighbor_set(v).for_each([&](Vertex w) { rows_[rank[v]].set(rank[w]); });
    }
  }

  CliqueSearch run() {
    Bitset all(n_);
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    if (n_ > 0) expand(all);
    CliqueSearch out;
    out.nodes = nodes_;
    for (auto v : best_) out.witness.push_back(order_[v]);
    std::sort(out.witness.begin(), out.witness.end());
    if (best_.size() <= cap_) out.number = best_.size();
    return out;
  }

 private:
  bool done() const { return best_.size() > cap_; }

  void expand(Bitset candidates) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colors;
    color(candidates, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (done()) return;
      if (current_.size() + colors[i] <= best_.size()) return;
      const Vertex v = order[i];
      ++nodes_;
      current_.push_back(v);
      Bitset next = candidates;
      next &= rows_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  // Greedy sequential coloring; colors[i] bounds the clique within order[0..i].
  void color(const Bitset& candidates, std::vector<Vertex>& order,
             std::vector<std::size_t>& colors) const {
    Bitset uncolored = candidates;
    std::size_t k = 0;
    while (!uncolored.none()) {
      ++k;
      Bitset available = uncolored;
      for (std::size_t v = available.first(); v < n_; v = available.next(v + 1)) {
        available.subtract(rows_[v]);
        uncolored.reset(v);
        order.push_back(static_cast<Vertex>(v));
        colors.push_back(k);
      }
    }
  }

  std::size_t cap_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Bitset> rows_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CliqueSearch clique_number(const Graph& g, std::size_t cap) {
  if (cap < 2) fail(ErrorCode::kInvalidArgument, "clique cap must be >= 2");
  return CliqueSolver(g, cap).run();
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNotFound: return "not-found";
    case SearchStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

class PatternMatcher {
 public:
  PatternMatcher(const Graph& host, const Graph& pattern, EmbedMode mode,
                 std::uint64_t budget)
      : host_(host), pattern_(pattern), mode_(mode), budget_(budget) {
    const std::size_t m = pattern.n();
    // Most-constrained-first order: each step takes the vertex with the most
    // already-ordered neighbors, then the highest degree.
    std::vector<bool> placed(m, false);
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t best = m;
      std::size_t best_links = 0;
      for (std::size_t v = 0; v < m; ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (auto u : order_) links += pattern.adjacent(static_cast<Vertex>(v), u);
        if (best == m || links > best_links ||
            (links == best_links && pattern.degree(static_cast<Vertex>(v)) >
                                        pattern.degree(static_cast<Vertex>(best)))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(static_cast<Vertex>(best));
    }
    position_.resize(m);
    for (std::size_t i = 0; i < m; ++i) position_[order_[i]] = i;
    map_.assign(m, 0);

    eligible_.assign(m, Bitset(host.n()));
    for (std::size_t i = 0; i < m; ++i) {
      const auto need = pattern.degree(order_[i]);
      for (Vertex h = 0; h < host.n(); ++h) {
        if (host.degree(h) >= need) eligible_[i].set(h);
      }
    }
    used_ = Bitset(host.n());
  }

  PatternSearch run() {
    PatternSearch out;
    if (pattern_.n() == 0) {
      out.status = SearchStatus::kFound;
      out.embedding = Embedding{};
      return out;
    }
    const auto status = search(0);
    out.status = status;
    out.nodes = nodes_;
    if (status == SearchStatus::kFound) out.embedding = Embedding{map_};
    return out;
  }

 private:
  // Hosts for position i consistent with the positions mapped so far.
  Bitset candidates(std::size_t i, std::size_t mapped) const {
    Bitset c = eligible_[i];
    c.subtract(used_);
    const Vertex pv = order_[i];
    for (std::size_t j = 0; j < mapped; ++j) {
      const Vertex pu = order_[j];
      const auto hu = map_[pu];
      if (pattern_.adjacent(pv, pu)) {
        c &= host_.row(hu);
      } else if (mode_ == EmbedMode::kInduced) {
        c.subtract(host_.row(hu));
        c.reset(hu);
      }
      if (c.none()) break;
    }
    return c;
  }

  // Every later vertex adjacent to order_[i] must keep a candidate.
  bool forward_ok(std::size_t i) const {
    const Vertex pv = order_[i];
    for (std::size_t j = i + 1; j < order_.size(); ++j) {
      if (!pattern_.adjacent(pv, order_[j])) continue;
      if (candidates(j, i + 1).none()) return false;
    }
    return true;
  }

  SearchStatus search(std::size_t i) {
    if (i == order_.size()) return SearchStatus::kFound;
    const Bitset c = candidates(i, i);
    for (std::size_t h = c.first(); h < host_.n(); h = c.next(h + 1)) {
      if (++nodes_ > budget_) return SearchStatus::kBudgetExceeded;
      map_[order_[i]] = static_cast<Vertex>(h);
      used_.set(h);
      SearchStatus s = SearchStatus::kNotFound;
      if (forward_ok(i)) s = search(i + 1);
      used_.reset(h);
      if (s != SearchStatus::kNotFound) return s;
    }
    return SearchStatus::kNotFound;
  }

  const Graph& host_;
  const Graph& pattern_;
  EmbedMode mode_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<Vertex> map_;
  std::vector<Bitset> eligible_;
  Bitset used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PatternSearch contains_pattern(const Graph& host, const Graph& pattern,
                               EmbedMode mode, std::uint64_t budget) {
  if (pattern.n() > kMaxPatternVertices) {
    fail(ErrorCode::kTooLarge, "patterns are limited to 16 vertices");
  }
  return PatternMatcher(host, pattern, mode, budget).run();
}

}  // namespace pseudoturan
