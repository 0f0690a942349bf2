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

#include "pseudoturan/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pseudoturan::oracle {

namespace {

// Plain evaluation from the definition: edge (a, b) at positions i < j costs
// the back-degrees of both endpoints at the start of its interval (internal)
// or at position i (crossing).
std::size_t evaluate(const Graph& f, const std::vector<Vertex>& order,
                     const std::vector<int>& interval_of) {
  const std::size_t m = order.size();
  auto before = [&](Vertex v, std::size_t limit) {
    std::size_t c = 0;
    for (std::size_t t = 0; t < limit; ++t) c += f.adjacent(v, order[t]);
    return c;
  };
  std::size_t worst = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!f.adjacent(order[i], order[j])) continue;
      std::size_t at = i;
      if (interval_of[i] == interval_of[j]) {
        at = i;
        while (at > 0 && interval_of[at - 1] == interval_of[i]) --at;
      }
      worst = std::max(worst, before(order[i], at) + before(order[j], at));
    }
  }
  return worst;
}

bool is_forest(const Graph& f, const std::vector<Vertex>& vs) {
  // Edges < vertices for every connected piece, i.e. no cycle: compare the
  // edge count with vertices minus components.
  const std::size_t k = vs.size();
  std::vector<int> comp(k, -1);
  int comps = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      const auto a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < k; ++b) {
        if (comp[b] < 0 && f.adjacent(vs[a], vs[b])) {
          comp[b] = comps;
          stack.push_back(b);
        }
      }
    }
    ++comps;
  }
  std::size_t edges = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) edges += f.adjacent(vs[a], vs[b]);
  }
  return edges + static_cast<std::size_t>(comps) == k;
}

}  // namespace

std::size_t d2_two(const Graph& f) {
  std::vector<Vertex> order(f.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::vector<int> singletons(f.n());
  std::iota(singletons.begin(), singletons.end(), 0);
  std::size_t best = ~std::size_t{0};
  do {
    best = std::min(best, evaluate(f, order, singletons));
  } while (std::next_permutation(order.begin(), order.end()));
  return f.n() == 0 ? 0 : best;
}

std::size_t dhat2_two(const Graph& f) {
  const std::size_t m = f.n();
  if (m == 0) return 0;
  std::vector<Vertex> order(m);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::size_t best = ~std::size_t{0};
  do {
    for (std::uint32_t cuts = 0; cuts < (1U << (m - 1)); ++cuts) {
      // Bit t set: a new interval starts at position t + 1.
      std::vector<int> owner(m, 0);
      for (std::size_t i = 1; i < m; ++i) owner[i] = owner[i - 1] + ((cuts >> (i - 1)) & 1U);
      bool ok = true;
      for (int s = 0; s <= owner[m - 1] && ok; ++s) {
        std::vector<Vertex> part;
        for (std::size_t i = 0; i < m; ++i) {
          if (owner[i] == s) part.push_back(order[i]);
        }
        ok = is_forest(f, part);
      }
      if (ok) best = std::min(best, evaluate(f, order, owner));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool forest_feasible(const Graph& g, const Graph& forest,
                     std::span<const Bitset> candidates) {
  const std::size_t m = forest.n();
  std::vector<std::vector<std::uint32_t>> options;
  for (const auto& c : candidates) options.push_back(c.to_vector());
  std::vector<Vertex> image(m);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == m) return true;
    for (auto h : options[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (image[j] == h) ok = false;
        if (forest.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) &&
            !g.adjacent(h, image[j])) {
          ok = false;
        }
      }
      if (!ok) continue;
      image[i] = h;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t a = 0; a < n && clique; ++a) {
      if (!(s >> a & 1U)) continue;
      for (std::size_t b = a + 1; b < n && clique; ++b) {
        if ((s >> b & 1U) && !g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
          clique = false;
        }
      }
    }
    if (clique) best = size;
  }
  return best;
}

bool contains(const Graph& host, const Graph& pattern, EmbedMode mode) {
  const std::size_t m = pattern.n();
  std::vector<Vertex> image(m);
  std::vector<bool> used(host.n(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == m) return true;
    for (Vertex h = 0; h < host.n(); ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const bool want = pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
        const bool have = host.adjacent(h, image[j]);
        ok = mode == EmbedMode::kInduced ? want == have : (!want || have);
      }
      if (!ok) continue;
      image[i] = h;
      used[h] = true;
      if (go(i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return go(0);
}

bool triangle_free(const Graph& g) {
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b = a + 1; b < g.n(); ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < g.n(); ++c) {
        if (g.adjacent(a, c) && g.adjacent(b, c)) return false;
      }
    }
  }
  return true;
}

bool k23_free(const Graph& g) {
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b = a + 1; b < g.n(); ++b) {
      std::size_t common = 0;
      for (Vertex c = 0; c < g.n(); ++c) common += g.adjacent(a, c) && g.adjacent(b, c);
      if (common >= 3) return false;
    }
  }
  return true;
}

}  // namespace pseudoturan::oracle
