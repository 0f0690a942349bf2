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

#include "pseudoturan/embedder.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace pseudoturan {

namespace {

std::size_t ceil_of(const Rational& r) {
  if (r <= Rational(0)) return 0;
  return static_cast<std::size_t>((r.numerator() + r.denominator() - 1) / r.denominator());
}

Rational rat(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

Bitset first_k(const Bitset& s, std::size_t k) {
  Bitset out(s.size());
  for (std::size_t v = s.first(); v < s.size() && k > 0; v = s.next(v + 1), --k) out.set(v);
  return out;
}

Bitset neighbors_in(const Graph& g, Vertex v, const Bitset& s) {
  Bitset out = s;
  out &= g.row(v);
  return out;
}

// Disjoint Za in a and Zb in b; the smaller candidate set picks first.
std::pair<Bitset, Bitset> split_disjoint(const Bitset& a, const Bitset& b,
                                         std::size_t ta, std::size_t tb) {
  if (a.count() <= b.count()) {
    Bitset za = first_k(a, ta);
    Bitset rest = b;
    rest.subtract(za);
    return {za, first_k(rest, tb)};
  }
  Bitset zb = first_k(b, tb);
  Bitset rest = a;
  rest.subtract(zb);
  return {first_k(rest, ta), zb};
}

class Tracer {
 public:
  explicit Tracer(EmbedOutcome& out) : out_(out) {}

  void ok(std::string name, std::size_t target, std::size_t size, std::string note = {}) {
    out_.trace.push_back({out_.trace.size(), std::move(name), true, target, size, std::move(note)});
  }
  EmbedOutcome& fail(std::string name, std::string reason, std::size_t target = 0,
                     std::size_t size = 0) {
    const std::size_t index = out_.trace.size();
    out_.trace.push_back({index, name, false, target, size, reason});
    out_.failure = StageFailure{index, std::move(name), std::move(reason)};
    return out_;
  }

 private:
  EmbedOutcome& out_;
};

std::string retention_note(const CleanResult& c) {
  std::ostringstream note;
  note << "retained x=" << (c.x_retained ? "yes" : "no")
       << " y=" << (c.y_retained ? "yes" : "no") << " removed=" << c.removed;
  return note.str();
}

std::string shortfall(std::size_t target, std::size_t size) {
  return size < target ? "below target" : "";
}

}  // namespace

FractionProfile FractionProfile::relaxed() {
  FractionProfile f;
  f.z78 = Rational(1, 4);
  f.w_degree = Rational(1, 10);
  f.z7 = Rational(1, 20);
  f.z2 = Rational(1, 4);
  return f;
}

FractionProfile FractionProfile::named(const std::string& name) {
  if (name == "paper") return paper();
  if (name == "relaxed") return relaxed();
  fail(ErrorCode::kInvalidArgument, "unknown profile '" + name + "'");
}

void EmbedParams::validate() const {
  if (density <= Rational(0) || density > Rational(1)) {
    fail(ErrorCode::kInvalidArgument, "density must lie in (0,1]");
  }
  const auto& f = fractions;
  for (const auto* r : {&f.v1_degree, &f.retention, &f.z78, &f.w_share, &f.w_degree,
                        &f.z7, &f.z2, &f.clean}) {
    if (*r <= Rational(0) || *r > Rational(1)) fail(ErrorCode::kInvalidArgument, "stage fractions must lie in (0,1]");
  }
  if (q_margin <= Rational(1)) fail(ErrorCode::kInvalidArgument, "q-margin must exceed 1");
}

Vertex find_wide_vertex(const Graph& g, const Bitset& x, std::span<const Bitset> ys,
                        const Rational& p, const Rational& qm) {
  if (x.none()) fail(ErrorCode::kInvalidArgument, "empty X");
  if (qm <= Rational(1)) fail(ErrorCode::kInvalidArgument, "q-margin must exceed 1");
  std::vector<Rational> thresholds;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i].none()) fail(ErrorCode::kInvalidArgument, "empty Y set");
    if (x.count_and(ys[i].words()) != 0) fail(ErrorCode::kInvalidArgument, "X meets a Y set");
    for (std::size_t j = 0; j < i; ++j) {
      if (ys[i].count_and(ys[j].words()) != 0) {
        fail(ErrorCode::kInvalidArgument, "Y sets overlap");
      }
    }
    thresholds.push_back((qm - 1) / qm * p * rat(ys[i].count()));
  }
  for (std::size_t v = x.first(); v < x.size(); v = x.next(v + 1)) {
    bool wide = true;
    for (std::size_t i = 0; i < ys.size() && wide; ++i) {
      wide = rat(ys[i].count_and(g.row(static_cast<Vertex>(v)))) >= thresholds[i];
    }
    if (wide) return static_cast<Vertex>(v);
  }
  fail(ErrorCode::kNotFound, "no vertex of X is wide towards every Y set");
}

CleanResult clean_pair(const Graph& g, const Bitset& x, const Bitset& y,
                       const Rational& p, const Rational& fraction) {
  if (x.count_and(y.words()) != 0) fail(ErrorCode::kInvalidArgument, "X and Y overlap");
  const std::size_t n = g.n();
  const Rational factor = fraction * p;
  CleanResult out{x, y, false, false, 0};
  std::size_t size_x = x.count();
  std::size_t size_y = y.count();
  // deg[v]: neighbors of v on the opposite side.
  std::vector<std::size_t> deg(n, 0);
  x.for_each([&](Vertex v) { deg[v] = y.count_and(g.row(v)); });
  y.for_each([&](Vertex v) { deg[v] = x.count_and(g.row(v)); });

  auto low = [&](Vertex v) {
    const std::size_t other = out.x.test(v) ? size_y : size_x;
    return rat(deg[v]) < factor * rat(other);
  };
  while (true) {
    Bitset both = out.x;
    both |= out.y;
    std::size_t victim = n;
    for (std::size_t v = both.first(); v < n; v = both.next(v + 1)) {
      if (low(static_cast<Vertex>(v))) {
        victim = v;
        break;
      }
    }
    if (victim == n) break;
    const auto v = static_cast<Vertex>(victim);
    const bool from_x = out.x.test(v);
    Bitset& own = from_x ? out.x : out.y;
    const Bitset& other = from_x ? out.y : out.x;
    own.reset(v);
    (from_x ? size_x : size_y) -= 1;
    ++out.removed;
    neighbors_in(g, v, other).for_each([&](Vertex w) { --deg[w]; });
    if (size_x == 0 || size_y == 0) {
      fail(ErrorCode::kDegenerated, std::string("cleaning emptied the ") +
                                        (size_x == 0 ? "X" : "Y") + " side");
    }
  }
  out.x_retained = rat(size_x) * 10 >= rat(x.count()) * 9;
  out.y_retained = rat(size_y) * 10 >= rat(y.count()) * 9;
  return out;
}

Embedding embed_forest(const Graph& g, const Graph& forest,
                       std::span<const Bitset> candidates) {
  const std::size_t m = forest.n();
  if (candidates.size() != m) {
    fail(ErrorCode::kInvalidArgument, "one candidate set per forest vertex required");
  }
  {
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (const auto& [u, v] : forest.edges()) {
      const auto ru = find(u);
      const auto rv = find(v);
      if (ru == rv) fail(ErrorCode::kNotAForest, "pattern contains a cycle");
      parent[rv] = ru;
    }
  }
  Bitset seen(g.n());
  for (const auto& c : candidates) {
    if (c.size() != g.n()) fail(ErrorCode::kDimensionMismatch, "candidate set size");
    if (c.none()) fail(ErrorCode::kInvalidArgument, "empty candidate set");
    if (seen.count_and(c.words()) != 0) {
      fail(ErrorCode::kInvalidArgument, "candidate sets overlap");
    }
    seen |= c;
  }

  std::vector<Bitset> sets(candidates.begin(), candidates.end());
  std::vector<std::size_t> deg(m);
  for (std::size_t v = 0; v < m; ++v) deg[v] = forest.degree(static_cast<Vertex>(v));
  std::vector<bool> gone(m, false);
  std::vector<std::size_t> parent(m, m);
  std::vector<std::size_t> removal;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t leaf = m;
    for (std::size_t v = m; v-- > 0;) {
      if (!gone[v] && deg[v] <= 1) {
        leaf = v;
        break;
      }
    }
    gone[leaf] = true;
    removal.push_back(leaf);
    for (auto u : forest.neighbors(static_cast<Vertex>(leaf))) {
      if (gone[u]) continue;
      parent[leaf] = u;
      --deg[u];
      Bitset kept(g.n());
      sets[u].for_each([&](Vertex h) {
        if (sets[leaf].count_and(g.row(h)) > 0) kept.set(h);
      });
      if (kept.none()) {
        fail(ErrorCode::kCandidateExhausted,
             "candidate set of forest vertex " + std::to_string(u) + " emptied");
      }
      sets[u] = std::move(kept);
    }
  }

  Embedding out;
  out.map.assign(m, 0);
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
    const std::size_t v = *it;
    if (parent[v] == m) {
      out.map[v] = static_cast<Vertex>(sets[v].first());
    } else {
      out.map[v] = static_cast<Vertex>(neighbors_in(g, out.map[parent[v]], sets[v]).first());
    }
  }
  if (!is_valid_embedding(g, forest, out)) {
    throw std::logic_error("forest embedding failed validation");
  }
  return out;
}

EmbedOutcome embed_petersen(const Graph& g, const EmbedParams& params) {
  params.validate();
  EmbedOutcome out;
  out.mode = "petersen";
  Tracer trace(out);
  const auto& f = params.fractions;
  const Rational p = params.density;
  const std::size_t n = g.n();
  const Rational pn = p * rat(n);
  const Rational p2n = p * p * rat(n);

  // v1 and its neighborhood X.
  if (n == 0 || g.max_degree() == 0) return trace.fail("v1", "host has no edges");
  const std::size_t v1_target = ceil_of(f.v1_degree * pn);
  Vertex v1 = 0;
  {
    std::optional<Vertex> hit;
    for (Vertex v = 0; v < n && !hit; ++v) {
      if (g.degree(v) >= v1_target) hit = v;
    }
    if (!hit) {
      for (Vertex v = 1; v < n; ++v) {
        if (g.degree(v) > g.degree(v1)) v1 = v;
      }
    }
    v1 = hit.value_or(v1);
  }
  trace.ok("v1", v1_target, g.degree(v1), shortfall(v1_target, g.degree(v1)));

  const Bitset x = first_k(g.neighbor_set(v1), v1_target);
  Bitset y(n);
  for (std::size_t v = 0; v < n; ++v) y.set(v);
  y.subtract(x);
  y.reset(v1);
  trace.ok("split", v1_target, x.count(), shortfall(v1_target, x.count()));
  if (y.none()) return trace.fail("split", "Y is empty");

  CleanResult xy;
  try {
    xy = clean_pair(g, x, y, p, f.clean);
  } catch (const Error& e) {
    return trace.fail("clean-xy", e.what());
  }
  trace.ok("clean-xy", x.count(), xy.x.count(), retention_note(xy));
  const Bitset& xp = xy.x;
  const Bitset& yp = xy.y;

  // v3 and Z78 inside its Y'-neighborhood.
  const std::size_t z78_target = ceil_of(f.z78 * pn);
  Vertex v3 = static_cast<Vertex>(xp.first());
  {
    std::size_t best = 0;
    std::optional<Vertex> hit;
    xp.for_each([&](Vertex v) {
      if (hit) return;
      const std::size_t c = yp.count_and(g.row(v));
      if (c >= z78_target) hit = v;
      if (c > best) {
        best = c;
        v3 = v;
      }
    });
    if (hit) v3 = *hit;
  }
  const Bitset z78_all = first_k(neighbors_in(g, v3, yp), z78_target);
  if (z78_all.none()) return trace.fail("v3", "no vertex of X' has a neighbor in Y'", z78_target, 0);
  trace.ok("v3", z78_target, z78_all.count(), shortfall(z78_target, z78_all.count()));

  Bitset rest = yp;
  rest.subtract(z78_all);
  if (rest.none()) return trace.fail("clean-z78", "Y' is exhausted by Z78");
  CleanResult zc;
  try {
    zc = clean_pair(g, z78_all, rest, p, f.clean);
  } catch (const Error& e) {
    return trace.fail("clean-z78", e.what());
  }
  trace.ok("clean-z78", z78_all.count(), zc.x.count(), retention_note(zc));
  const Bitset& z78 = zc.x;

  // W: vertices of Y' \ Z78 with many neighbors in Z78.
  const std::size_t w_degree = std::max<std::size_t>(1, ceil_of(f.w_degree * p2n));
  Bitset w(n);
  zc.y.for_each([&](Vertex v) {
    if (z78.count_and(g.row(v)) >= w_degree) w.set(v);
  });
  const std::size_t w_target = ceil_of(f.w_share * rat(n));
  if (w.count() < 2) return trace.fail("w", "fewer than two vertices reach the Z78 degree", w_target, w.count());
  trace.ok("w", w_target, w.count(), "degree threshold " + std::to_string(w_degree));

  std::optional<Edge> e69;
  w.for_each([&](Vertex a) {
    if (e69) return;
    const auto b = neighbors_in(g, a, w).next(a + 1);
    if (b < n) e69 = Edge{a, static_cast<Vertex>(b)};
  });
  if (!e69) return trace.fail("v6v9", "W spans no edge", 1, 0);
  const auto [v6, v9] = *e69;
  trace.ok("v6v9", 1, 1);

  const std::size_t z7_target = std::max<std::size_t>(1, ceil_of(f.z7 * p2n));
  const auto [z7, z8] = split_disjoint(neighbors_in(g, v9, z78), neighbors_in(g, v6, z78),
                                       z7_target, z7_target);
  if (z7.none() || z8.none()) {
    return trace.fail("z7z8", "Z7 or Z8 is empty after the disjoint split", z7_target,
                      std::min(z7.count(), z8.count()));
  }
  trace.ok("z7z8", z7_target, std::min(z7.count(), z8.count()),
           shortfall(z7_target, std::min(z7.count(), z8.count())));

  Bitset xpp = xp;
  xpp.reset(v3);
  const std::size_t z2_target = std::max<std::size_t>(1, ceil_of(f.z2 * p2n));
  const auto [z2, z4] = split_disjoint(neighbors_in(g, v6, xpp), neighbors_in(g, v9, xpp),
                                       z2_target, z2_target);
  if (z2.none() || z4.none()) {
    return trace.fail("z2z4", "Z2 or Z4 is empty after the disjoint split", z2_target,
                      std::min(z2.count(), z4.count()));
  }
  trace.ok("z2z4", z2_target, std::min(z2.count(), z4.count()),
           shortfall(z2_target, std::min(z2.count(), z4.count())));

  // Z5, Z10 from Y'' after cleaning against Z2 and Z4.
  Bitset ypp = yp;
  ypp.subtract(z78_all);
  ypp.reset(v6);
  ypp.reset(v9);
  if (ypp.none()) return trace.fail("z5z10", "Y'' is empty");
  CleanResult c2;
  CleanResult c4;
  try {
    c2 = clean_pair(g, z2, ypp, p, f.clean);
    c4 = clean_pair(g, z4, ypp, p, f.clean);
  } catch (const Error& e) {
    return trace.fail("z5z10", e.what());
  }
  Bitset a5(n);
  c2.y.for_each([&](Vertex v) {
    if (c2.x.count_and(g.row(v)) > 0) a5.set(v);
  });
  Bitset a10(n);
  c4.y.for_each([&](Vertex v) {
    if (c4.x.count_and(g.row(v)) > 0) a10.set(v);
  });
  const std::size_t z5_target = ceil_of(f.retention / 2 * rat(ypp.count()));
  const auto [z5, z10] = split_disjoint(a5, a10, z5_target, z5_target);
  if (z5.none() || z10.none()) {
    return trace.fail("z5z10", "Z5 or Z10 is empty after the disjoint split", z5_target,
                      std::min(z5.count(), z10.count()));
  }
  trace.ok("z5z10", z5_target, std::min(z5.count(), z10.count()),
           shortfall(z5_target, std::min(z5.count(), z10.count())));

  Vertex v7 = 0;
  Vertex v8 = 0;
  try {
    v7 = find_wide_vertex(g, z7, std::span<const Bitset>(&z5, 1), p, params.q_margin);
  } catch (const Error& e) {
    return trace.fail("v7", e.what());
  }
  const Bitset z5p = neighbors_in(g, v7, z5);
  trace.ok("v7", 1, z5p.count());
  try {
    v8 = find_wide_vertex(g, z8, std::span<const Bitset>(&z10, 1), p, params.q_margin);
  } catch (const Error& e) {
    return trace.fail("v8", e.what());
  }
  const Bitset z10p = neighbors_in(g, v8, z10);
  trace.ok("v8", 1, z10p.count());
  if (z5p.none() || z10p.none()) return trace.fail("v5v10", "Z5' or Z10' is empty");

  std::optional<Edge> e510;
  z5p.for_each([&](Vertex a) {
    if (e510) return;
    const auto b = neighbors_in(g, a, z10p).first();
    if (b < n) e510 = Edge{a, static_cast<Vertex>(b)};
  });
  if (!e510) return trace.fail("v5v10", "no edge between Z5' and Z10'", 1, 0);
  const auto [v5, v10] = *e510;
  trace.ok("v5v10", 1, 1);

  const auto v2 = neighbors_in(g, v5, c2.x).first();
  const auto v4 = neighbors_in(g, v10, c4.x).first();
  if (v2 >= n || v4 >= n) return trace.fail("v2v4", "v5 or v10 lost its Z2/Z4 neighbor");
  trace.ok("v2v4", 1, 1);

  Embedding emb{{v1, static_cast<Vertex>(v2), v3, static_cast<Vertex>(v4), v5, v6, v7, v8, v9, v10}};
  if (!is_valid_embedding(g, petersen_pattern(), emb)) {
    return trace.fail("validate", "assembled map is not a Petersen embedding");
  }
  trace.ok("validate", 10, 10);
  out.embedding = std::move(emb);
  return out;
}

PreconditionReport check_theorem_preconditions(std::uint64_t n, const Rational& p,
                                               double alpha) {
  using boost::multiprecision::cpp_int;
  PreconditionReport r;
  const long double pd = static_cast<long double>(p.numerator()) / p.denominator();
  const long double nd = static_cast<long double>(n);
  r.alpha_bound = static_cast<double>(pd * pd * nd / 200);
  r.alpha_ok = alpha <= r.alpha_bound;
  r.density_bound = static_cast<double>(10 / std::cbrt(nd));
  // p >= 10 n^{-1/3}  <=>  num^3 n >= 1000 den^3.
  const cpp_int num = p.numerator();
  const cpp_int den = p.denominator();
  r.density_ok = p > Rational(0) && num * num * num * cpp_int(n) >= 1000 * den * den * den;
  const long double ratio = static_cast<long double>(alpha) / pd;
  r.pair_lhs = static_cast<double>(4 * ratio * ratio);
  r.pair_rhs = static_cast<double>(pd * pd * nd * nd / 5000);
  r.pair_ok = 4 * ratio * ratio <= pd * pd * nd * nd / 5000;
  return r;
}

EmbedOutcome embed_general(const Graph& g, const Graph& f,
                           const OrderingCertificate& cert, const EmbedParams& params) {
  params.validate();
  validate_certificate(f, cert);
  EmbedOutcome out;
  Tracer trace(out);
  const std::size_t m = f.n();
  const std::size_t n = g.n();
  const Rational p = params.density;

  const std::size_t k = cert.breakpoints.empty() ? 0 : cert.breakpoints.back();
  bool tail_mode = false;
  if (m > 0) {
    try {
      tail_mode = eval_tail(f, cert.ordering, k) <= cert.two_d;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIntervalNotForest) throw;
    }
  }
  out.mode = tail_mode ? "tail" : "multi-interval (experimental)";
  if (m == 0) {
    out.embedding = Embedding{};
    return out;
  }
  if (m > n) return trace.fail("partition", "host has fewer vertices than the pattern");

  std::vector<std::size_t> starts;
  if (tail_mode) {
    for (std::size_t i = 0; i < k; ++i) starts.push_back(i);
    starts.push_back(k);
  } else {
    starts = cert.breakpoints;
  }

  std::vector<std::size_t> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[cert.ordering[i]] = i;
  // Vertex at position i starts from block i of a contiguous partition.
  std::vector<Bitset> cand(m, Bitset(n));
  std::vector<std::size_t> block_size(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lo = i * n / m;
    const std::size_t hi = (i + 1) * n / m;
    for (std::size_t v = lo; v < hi; ++v) cand[cert.ordering[i]].set(v);
    block_size[cert.ordering[i]] = hi - lo;
  }
  std::vector<std::size_t> placed_nbrs(m, 0);
  Embedding emb;
  emb.map.assign(m, 0);

  // Restrict later neighbors of x to N(image) and report the worst slack.
  auto propagate = [&](Vertex x, std::size_t end, std::size_t step) -> std::optional<std::string> {
    for (auto y : f.neighbors(x)) {
      if (pos[y] < end) continue;
      cand[y] &= g.row(emb.map[x]);
      ++placed_nbrs[y];
      if (cand[y].none()) {
        std::ostringstream why;
        const double bound = std::pow(to_double(p), static_cast<double>(placed_nbrs[y])) *
                             static_cast<double>(block_size[y]) / std::pow(2.0, static_cast<double>(step));
        why << "candidate set of pattern vertex " << y << " emptied; claimed lower bound "
            << bound;
        return why.str();
      }
    }
    return std::nullopt;
  };

  for (std::size_t s = 0; s < starts.size(); ++s) {
    const std::size_t a = starts[s];
    const std::size_t b = s + 1 < starts.size() ? starts[s + 1] : m;
    const std::string name = "position " + std::to_string(a);
    if (b - a == 1) {
      const Vertex x = cert.ordering[a];
      std::vector<Bitset> ys;
      for (auto y : f.neighbors(x)) {
        if (pos[y] > a) ys.push_back(cand[y]);
      }
      try {
        emb.map[x] = ys.empty() ? static_cast<Vertex>(cand[x].first())
                                : find_wide_vertex(g, cand[x], ys, p, params.q_margin);
      } catch (const Error& e) {
        return trace.fail(name, e.what(), 1, 0);
      }
      if (auto why = propagate(x, a + 1, a + 1)) return trace.fail(name, *why, 1, 0);
      trace.ok(name, 1, 1);
      continue;
    }

    std::vector<Vertex> part(cert.ordering.begin() + static_cast<std::ptrdiff_t>(a),
                             cert.ordering.begin() + static_cast<std::ptrdiff_t>(b));
    std::vector<Bitset> sets;
    for (auto x : part) {
      Bitset c = cand[x];
      if (!tail_mode) {
        // Prefer vertices that stay wide towards later neighbors.
        std::vector<Bitset> ys;
        for (auto y : f.neighbors(x)) {
          if (pos[y] >= b) ys.push_back(cand[y]);
        }
        if (!ys.empty()) {
          Bitset wide(n);
          c.for_each([&](Vertex h) {
            bool ok = true;
            for (const auto& yset : ys) {
              ok = ok && rat(yset.count_and(g.row(h))) >=
                             (params.q_margin - 1) / params.q_margin * p * rat(yset.count());
            }
            if (ok) wide.set(h);
          });
          if (!wide.none()) c = std::move(wide);
        }
      }
      sets.push_back(std::move(c));
    }
    const Graph forest = induced(f, std::span<const Vertex>(part));
    Embedding local;
    try {
      local = embed_forest(g, forest, sets);
    } catch (const Error& e) {
      return trace.fail(name, e.what(), part.size(), 0);
    }
    for (std::size_t i = 0; i < part.size(); ++i) emb.map[part[i]] = local.map[i];
    for (auto x : part) {
      if (auto why = propagate(x, b, b)) return trace.fail(name, *why, part.size(), 0);
    }
    trace.ok(name, part.size(), part.size(), "forest interval");
  }

  if (!is_valid_embedding(g, f, emb)) {
    return trace.fail("validate", "assembled map is not an embedding");
  }
  trace.ok("validate", m, m);
  out.embedding = std::move(emb);
  return out;
}

}  // namespace pseudoturan
