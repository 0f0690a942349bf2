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

#include "pseudoturan/ordering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pseudoturan {

namespace {

// back[i][v] = number of neighbors of v among the first i positions.
std::vector<std::vector<std::size_t>> back_degrees(const Graph& f,
                                                   std::span<const Vertex> ordering) {
  const std::size_t m = f.n();
  std::vector<std::vector<std::size_t>> back(m + 1, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    back[i + 1] = back[i];
    for (auto w : f.neighbors(ordering[i])) ++back[i + 1][w];
  }
  return back;
}

std::vector<std::size_t> positions(std::span<const Vertex> ordering) {
  std::vector<std::size_t> pos(ordering.size());
  for (std::size_t i = 0; i < ordering.size(); ++i) pos[ordering[i]] = i;
  return pos;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// A cycle inside f[vertices], or empty if the induced graph is a forest.
std::vector<Vertex> find_cycle(const Graph& f, std::span<const Vertex> vertices) {
  UnionFind uf(f.n());
  std::vector<std::vector<Vertex>> forest(f.n());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const Vertex u = vertices[b];
      const Vertex v = vertices[a];
      if (!f.adjacent(u, v)) continue;
      if (uf.unite(u, v)) {
        forest[u].push_back(v);
        forest[v].push_back(u);
        continue;
      }
      // Path u -> v in the current forest closes the cycle.
      std::vector<Vertex> parent(f.n(), static_cast<Vertex>(f.n()));
      std::vector<Vertex> queue{u};
      parent[u] = u;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto w : forest[queue[head]]) {
          if (parent[w] == f.n()) {
            parent[w] = queue[head];
            queue.push_back(w);
          }
        }
      }
      std::vector<Vertex> cycle;
      for (Vertex x = v; x != u; x = parent[x]) cycle.push_back(x);
      cycle.push_back(u);
      return cycle;
    }
  }
  return {};
}

std::string join(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

// Interval index of every position.
std::vector<std::size_t> interval_of(std::size_t m,
                                     std::span<const std::size_t> breakpoints) {
  std::vector<std::size_t> owner(m, 0);
  for (std::size_t s = 0; s < breakpoints.size(); ++s) {
    const std::size_t end = s + 1 < breakpoints.size() ? breakpoints[s + 1] : m;
    for (std::size_t i = breakpoints[s]; i < end; ++i) owner[i] = s;
  }
  return owner;
}

void check_forests(const Graph& f, const OrderingCertificate& cert) {
  const std::size_t m = f.n();
  for (std::size_t s = 0; s < cert.breakpoints.size(); ++s) {
    const std::size_t begin = cert.breakpoints[s];
    const std::size_t end = s + 1 < cert.breakpoints.size() ? cert.breakpoints[s + 1] : m;
    const std::span<const Vertex> part(cert.ordering.data() + begin, end - begin);
    const auto cycle = find_cycle(f, part);
    if (!cycle.empty()) {
      fail(ErrorCode::kIntervalNotForest,
           "interval " + std::to_string(s) + " contains cycle " + join(cycle));
    }
  }
}

struct EdgeCost {
  Edge edge;
  std::size_t interval;
  bool internal;
  std::size_t value;
};

std::vector<EdgeCost> edge_costs(const Graph& f, const OrderingCertificate& cert) {
  const std::size_t m = f.n();
  const auto back = back_degrees(f, cert.ordering);
  const auto owner = interval_of(m, cert.breakpoints);
  std::vector<EdgeCost> costs;
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      const Vertex u = cert.ordering[a];
      const Vertex v = cert.ordering[b];
      if (!f.adjacent(u, v)) continue;
      const std::size_t s = owner[a];
      if (owner[b] == s) {
        const std::size_t k = cert.breakpoints[s];
        costs.push_back({{u, v}, s, true, back[k][u] + back[k][v]});
      } else {
        costs.push_back({{u, v}, s, false, back[a][u] + back[a][v]});
      }
    }
  }
  return costs;
}

}  // namespace

void validate_ordering(const Graph& f, std::span<const Vertex> ordering) {
  if (ordering.size() != f.n()) {
    fail(ErrorCode::kNotAPermutation, "ordering length differs from vertex count");
  }
  std::vector<bool> seen(f.n(), false);
  for (auto v : ordering) {
    if (v >= f.n() || seen[v]) {
      fail(ErrorCode::kNotAPermutation, "ordering repeats or exceeds vertex " +
                                            std::to_string(v));
    }
    seen[v] = true;
  }
}

void validate_certificate(const Graph& f, const OrderingCertificate& cert) {
  validate_ordering(f, cert.ordering);
  const auto& bp = cert.breakpoints;
  if (f.n() == 0) {
    if (!bp.empty()) fail(ErrorCode::kInvalidArgument, "breakpoints on empty graph");
    return;
  }
  if (bp.empty() || bp.front() != 0) {
    fail(ErrorCode::kInvalidArgument, "breakpoints must start at position 0");
  }
  for (std::size_t s = 1; s < bp.size(); ++s) {
    if (bp[s] <= bp[s - 1]) {
      fail(ErrorCode::kInvalidArgument, "breakpoints must strictly increase");
    }
  }
  if (bp.back() >= f.n()) {
    fail(ErrorCode::kInvalidArgument, "breakpoint beyond last position");
  }
}

std::size_t eval_d2(const Graph& f, std::span<const Vertex> ordering) {
  validate_ordering(f, ordering);
  const auto back = back_degrees(f, ordering);
  const auto pos = positions(ordering);
  std::size_t worst = 0;
  for (const auto& [u, v] : f.edges()) {
    const std::size_t i = std::min(pos[u], pos[v]);
    worst = std::max(worst, back[i][u] + back[i][v]);
  }
  return worst;
}

OrderingResult d2(const Graph& f) {
  const std::size_t m = f.n();
  if (m > kMaxSubsetDp) {
    fail(ErrorCode::kTooLarge, "subset program is limited to 24 vertices");
  }
  std::vector<std::uint32_t> adj(m, 0);
  for (const auto& [u, v] : f.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  const std::uint32_t full = m == 32 ? ~0U : (1U << m) - 1;
  // Cost of placing v right after the set `placed`.
  auto penalty = [&](std::uint32_t placed, const std::vector<std::uint8_t>& cnt,
                     std::size_t v) -> std::uint8_t {
    std::uint32_t later = adj[v] & ~placed & ~(1U << v);
    if (later == 0) return 0;
    std::uint8_t worst = 0;
    while (later != 0) {
      const int w = std::countr_zero(later);
      later &= later - 1;
      worst = std::max(worst, cnt[w]);
    }
    return static_cast<std::uint8_t>(cnt[v] + worst);
  };

  // rest[S]: best achievable maximum over the placements that complete S.
  std::vector<std::uint8_t> rest(std::size_t{1} << m, 0);
  std::vector<std::uint8_t> cnt(m);
  for (std::uint32_t s = full; s-- > 0;) {
    for (std::size_t w = 0; w < m; ++w) cnt[w] = static_cast<std::uint8_t>(std::popcount(adj[w] & s));
    std::uint8_t best = 255;
    for (std::size_t v = 0; v < m; ++v) {
      if (s >> v & 1U) continue;
      const auto cost = std::max(penalty(s, cnt, v), rest[s | (1U << v)]);
      best = std::min(best, cost);
    }
    rest[s] = best;
  }

  OrderingResult out;
  out.cert.two_d = m == 0 ? 0 : rest[0];
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t w = 0; w < m; ++w) cnt[w] = static_cast<std::uint8_t>(std::popcount(adj[w] & s));
    for (std::size_t v = 0; v < m; ++v) {
      if (s >> v & 1U) continue;
      if (std::max(penalty(s, cnt, v), rest[s | (1U << v)]) <= out.cert.two_d) {
        out.cert.ordering.push_back(static_cast<Vertex>(v));
        out.cert.breakpoints.push_back(i);
        s |= 1U << v;
        break;
      }
    }
  }
  out.d = Rational(static_cast<std::int64_t>(out.cert.two_d), 2);
  return out;
}

std::size_t eval_dhat2(const Graph& f, const OrderingCertificate& cert) {
  validate_certificate(f, cert);
  check_forests(f, cert);
  std::size_t worst = 0;
  for (const auto& c : edge_costs(f, cert)) worst = std::max(worst, c.value);
  return worst;
}

std::optional<Violation> find_violation(const Graph& f,
                                        const OrderingCertificate& cert) {
  validate_certificate(f, cert);
  for (const auto& c : edge_costs(f, cert)) {
    if (c.value > cert.two_d) {
      return Violation{c.internal ? ViolationKind::kInterval : ViolationKind::kCross,
                       c.edge, c.interval, c.value};
    }
  }
  return std::nullopt;
}

BreakpointChoice best_breakpoints(const Graph& f, std::span<const Vertex> ordering) {
  validate_ordering(f, ordering);
  const std::size_t m = f.n();
  if (m == 0) return {};
  const auto back = back_degrees(f, ordering);
  constexpr std::size_t kInf = ~std::size_t{0};

  struct State {
    std::size_t cost = kInf;
    std::vector<std::size_t> breakpoints;
  };
  auto better = [](std::size_t cost, const std::vector<std::size_t>& bp, const State& s) {
    if (cost != s.cost) return cost < s.cost;
    if (bp.size() != s.breakpoints.size()) return bp.size() < s.breakpoints.size();
    return bp < s.breakpoints;
  };

  std::vector<State> best(m + 1);
  best[0].cost = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (best[i].cost == kInf) continue;
    UnionFind uf(m);
    std::size_t interval_cost = 0;
    for (std::size_t j = i; j < m; ++j) {
      // Extend [i, j) by position j.
      const Vertex v = ordering[j];
      bool forest = true;
      for (std::size_t a = 0; a < j; ++a) {
        const Vertex u = ordering[a];
        if (!f.adjacent(u, v)) continue;
        if (a >= i) {
          if (!uf.unite(u, v)) {
            forest = false;
            break;
          }
          interval_cost = std::max(interval_cost, back[i][u] + back[i][v]);
        } else {
          interval_cost = std::max(interval_cost, back[a][u] + back[a][v]);
        }
      }
      if (!forest) break;
      const std::size_t cost = std::max(best[i].cost, interval_cost);
      auto bp = best[i].breakpoints;
      bp.push_back(i);
      if (better(cost, bp, best[j + 1])) best[j + 1] = {cost, std::move(bp)};
    }
  }
  return {best[m].cost, best[m].breakpoints};
}

namespace {

// Depth-first search for the lexicographically smallest ordering that admits
// some interval split of cost <= limit.
class Dhat2Search {
 public:
  Dhat2Search(const Graph& f, std::size_t limit) : m_(f.n()), limit_(limit) {
    adj_.assign(m_, 0);
    for (const auto& [u, v] : f.edges()) {
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
    prefix_.assign(m_ + 1, 0);
    order_.assign(m_, 0);
    pos_.assign(m_, 0);
  }

  std::optional<std::vector<Vertex>> run() {
    if (m_ == 0) return std::vector<Vertex>{};
    if (extend(0, 0, Components(m_, 0))) return order_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Component root (a position) of every vertex in the open interval.
  using Components = std::vector<std::uint8_t>;

  std::size_t back(std::size_t v, std::size_t i) const {
    return static_cast<std::size_t>(std::popcount(adj_[v] & prefix_[i]));
  }
  // Cross-rule cost of edge (u, w) where u sits at position pos_[u].
  std::size_t cross(std::size_t u, std::size_t w) const {
    return back(u, pos_[u]) + back(w, pos_[u]);
  }

  bool extend(std::size_t i, std::size_t k, const Components& comp) {
    if (i == m_) return true;
    const std::uint64_t placed = prefix_[i];
    for (std::size_t v = 0; v < m_; ++v) {
      if (placed >> v & 1U) continue;
      ++nodes_;
      order_[i] = static_cast<Vertex>(v);
      pos_[v] = i;
      prefix_[i + 1] = placed | std::uint64_t{1} << v;
      if (i > 0) {
        Components next = comp;
        if (try_continue(i, k, v, next) && extend(i + 1, k, next)) return true;
      }
      Components next = comp;
      if (try_open(i, k, v, next) && extend(i + 1, i, next)) return true;
    }
    return false;
  }

  // Later neighbors of v are charged at least the interval rule at k.
  bool future_ok(std::size_t v, std::size_t k) const {
    std::uint64_t later = adj_[v] & ~prefix_[pos_[v] + 1];
    while (later != 0) {
      const auto w = static_cast<std::size_t>(std::countr_zero(later));
      later &= later - 1;
      if (back(v, k) + back(w, k) > limit_) return false;
    }
    return true;
  }

  bool try_continue(std::size_t i, std::size_t k, std::size_t v, Components& comp) const {
    std::uint64_t earlier = adj_[v] & prefix_[i];
    std::uint64_t touched = 0;
    while (earlier != 0) {
      const auto u = static_cast<std::size_t>(std::countr_zero(earlier));
      earlier &= earlier - 1;
      if (pos_[u] >= k) {
        const std::uint64_t bit = std::uint64_t{1} << comp[u];
        if (touched & bit) return false;
        touched |= bit;
        if (back(u, k) + back(v, k) > limit_) return false;
      } else if (cross(u, v) > limit_) {
        return false;
      }
    }
    if (!future_ok(v, k)) return false;
    for (std::size_t a = k; a < i; ++a) {
      const auto u = order_[a];
      if (touched >> comp[u] & 1U) comp[u] = static_cast<std::uint8_t>(i);
    }
    comp[v] = static_cast<std::uint8_t>(i);
    return true;
  }

  bool try_open(std::size_t i, std::size_t k, std::size_t v, Components& comp) const {
    std::uint64_t earlier = adj_[v] & prefix_[i];
    while (earlier != 0) {
      const auto u = static_cast<std::size_t>(std::countr_zero(earlier));
      earlier &= earlier - 1;
      if (cross(u, v) > limit_) return false;
    }
    // Closing [k, i) turns every edge leaving it into a cross edge.
    for (std::size_t a = k; a < i; ++a) {
      const auto u = order_[a];
      std::uint64_t later = adj_[u] & ~prefix_[i];
      while (later != 0) {
        const auto w = static_cast<std::size_t>(std::countr_zero(later));
        later &= later - 1;
        if (cross(u, w) > limit_) return false;
      }
    }
    if (!future_ok(v, i)) return false;
    comp[v] = static_cast<std::uint8_t>(i);
    return true;
  }

  std::size_t m_;
  std::size_t limit_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> prefix_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> pos_;
  std::uint64_t nodes_ = 0;
};

bool lex_better(const BreakpointChoice& a, std::span<const Vertex> oa,
                const BreakpointChoice& b, std::span<const Vertex> ob) {
  if (a.two_d != b.two_d) return a.two_d < b.two_d;
  if (a.breakpoints.size() != b.breakpoints.size()) {
    return a.breakpoints.size() < b.breakpoints.size();
  }
  return std::lexicographical_compare(oa.begin(), oa.end(), ob.begin(), ob.end());
}

OrderingCertificate heuristic_dhat2(const Graph& f, const Dhat2Options& options) {
  const std::size_t m = f.n();
  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> best_order(m);
  std::iota(best_order.begin(), best_order.end(), Vertex{0});
  BreakpointChoice best = best_breakpoints(f, best_order);

  auto consider = [&](std::vector<Vertex> order) {
    BreakpointChoice choice = best_breakpoints(f, order);
    // Adjacent transpositions until no strict improvement.
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        std::swap(order[i], order[i + 1]);
        BreakpointChoice trial = best_breakpoints(f, order);
        if (trial.two_d < choice.two_d ||
            (trial.two_d == choice.two_d &&
             trial.breakpoints.size() < choice.breakpoints.size())) {
          choice = std::move(trial);
          improved = true;
        } else {
          std::swap(order[i], order[i + 1]);
        }
      }
    }
    if (lex_better(choice, order, best, best_order)) {
      best = std::move(choice);
      best_order = std::move(order);
    }
  };

  if (m <= 20) consider(d2(f).cert.ordering);
  std::vector<Vertex> order(m);
  for (std::size_t r = 0; r < options.restarts; ++r) {
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    consider(order);
  }
  return {best_order, best.breakpoints, best.two_d, true};
}

}  // namespace

OrderingResult dhat2(const Graph& f, const Dhat2Options& options) {
  const std::size_t m = f.n();
  OrderingCertificate cert;
  if (options.exact) {
    if (m > kMaxExactDhat2) {
      fail(ErrorCode::kTooLarge, "exact search is limited to 10 vertices");
    }
    const std::size_t upper = d2(f).cert.two_d;
    for (std::size_t limit = 0; limit <= upper; ++limit) {
      if (auto order = Dhat2Search(f, limit).run()) {
        cert.ordering = std::move(*order);
        break;
      }
    }
    auto choice = best_breakpoints(f, cert.ordering);
    cert.breakpoints = std::move(choice.breakpoints);
    cert.two_d = choice.two_d;
  } else {
    cert = heuristic_dhat2(f, options);
  }
  if (eval_dhat2(f, cert) != cert.two_d) {
    throw std::logic_error("dhat2 certificate failed re-verification");
  }
  return {Rational(static_cast<std::int64_t>(cert.two_d), 2), std::move(cert)};
}

Rational exp_upper_from_two_d(std::size_t two_d) {
  return Rational(static_cast<std::int64_t>(two_d),
                  static_cast<std::int64_t>(two_d) + 1);
}

Rational exp_upper(const Graph& f) {
  Dhat2Options options;
  options.exact = f.n() <= kMaxExactDhat2;
  return exp_upper_from_two_d(dhat2(f, options).cert.two_d);
}

std::size_t eval_tail(const Graph& f, std::span<const Vertex> ordering,
                      std::size_t tail) {
  if (tail >= f.n()) fail(ErrorCode::kInvalidArgument, "tail start beyond last position");
  OrderingCertificate cert;
  cert.ordering.assign(ordering.begin(), ordering.end());
  for (std::size_t i = 0; i <= tail; ++i) cert.breakpoints.push_back(i);
  return eval_dhat2(f, cert);
}

}  // namespace pseudoturan
