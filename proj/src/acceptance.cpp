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

#include "pseudoturan/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/embedder.hpp"
#include "pseudoturan/forbidden.hpp"
#include "pseudoturan/oracles.hpp"
#include "pseudoturan/ordering.hpp"
#include "pseudoturan/random.hpp"
#include "pseudoturan/spectral.hpp"

namespace pseudoturan {

namespace {

constexpr std::uint32_t kCubicPrimes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31};
constexpr std::uint32_t kDistanceQ[] = {5, 7, 11, 13, 17, 19, 23, 29, 31};
constexpr std::uint64_t kSeed = 1;

void expect(CriterionResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    r.notes.push_back("violated: " + what);
  }
}

CatalogEntry field_entry(std::string kind, Json params, std::uint32_t q,
                         std::function<Graph(const Field&)> make) {
  const Field field = Field::of_order(q);
  return {std::move(kind), std::move(params), field.describe(),
          [field, make = std::move(make)] { return make(field); }};
}

Graph host_for_seed(std::uint64_t seed) { return random_graph(8000, Rational(1, 2), seed); }

// Petersen ordering (1,3,6,9,2,4,5,7,8,10) with intervals starting at 1 and
// 5, written 0-based.
OrderingCertificate petersen_certificate() {
  return {{0, 2, 5, 8, 1, 3, 4, 6, 7, 9}, {0, 4}, 2, false};
}

void criterion_cubic(CriterionResult& r) {
  for (auto p : kCubicPrimes) {
    const Graph g = cubic_cayley(p);
    const auto d = g.regular_degree();
    const bool tri = is_triangle_free(g).free;
    const bool k23 = is_k23_free(g).free;
    const double lambda = lambda_nontrivial(g);
    const double bound = 2 * std::sqrt(static_cast<double>(p)) + 1;
    const auto chars = cayley_spectrum(cubic_cayley_spec(p));
    const auto dense = spectrum_dense(g);
    const bool agree = same_spectrum(chars.eigenvalues, dense.eigenvalues, 1e-8);
    const std::string tag = "p=" + std::to_string(p);
    expect(r, g.n() == std::size_t{p} * p, tag + " vertex count");
    expect(r, d && *d == p - 1, tag + " (p-1)-regular");
    expect(r, tri, tag + " triangle-free");
    expect(r, k23, tag + " K23-free");
    expect(r, lambda <= bound + 1e-6, tag + " lambda <= 2 sqrt(p) + 1");
    expect(r, agree, tag + " character-sum and dense spectra agree");
    r.data["primes"].push_back({{"p", p},
                                {"n", g.n()},
                                {"degree", d.value_or(0)},
                                {"triangle_free", tri},
                                {"k23_free", k23},
                                {"lambda", lambda},
                                {"bound", bound},
                                {"spectra_agree", agree},
                                {"max_imaginary", chars.max_imaginary}});
  }
}

void criterion_weil(CriterionResult& r) {
  std::size_t checked = 0;
  double worst_ratio = 0;
  for (std::uint32_t p = 5; p <= 199; ++p) {
    if (!is_prime(p)) continue;
    const auto audit = weil_audit(p);
    ++checked;
    worst_ratio = std::max(worst_ratio, audit.max_abs / audit.bound);
    expect(r, audit.holds, "p=" + std::to_string(p) + " |sum| <= 2 sqrt(p)");
  }
  r.data["primes_checked"] = checked;
  r.data["worst_ratio_to_bound"] = worst_ratio;
}

void criterion_kopparty(CriterionResult& r) {
  const Graph g = kopparty(2, 3);
  const bool tri = is_triangle_free(g).free;
  const auto search = contains_pattern(g, petersen_pattern(), EmbedMode::kInduced,
                                       kDefaultPatternBudget);
  const bool found = search.status == SearchStatus::kFound &&
                     is_valid_embedding(g, petersen_pattern(), *search.embedding,
                                        EmbedMode::kInduced);
  expect(r, g.n() == 512, "kopparty(2,3) has 512 vertices");
  expect(r, tri, "kopparty(2,3) triangle-free");
  expect(r, found, "induced Petersen within the node budget");
  Json k23{{"p", 2}, {"h", 3}, {"n", g.n()}, {"degree", g.max_degree()},
           {"triangle_free", tri}, {"induced_petersen", to_string(search.status)},
           {"nodes", search.nodes}};
  if (found) k23["embedding"] = search.embedding->map;
  r.data["kopparty"].push_back(k23);
  for (std::uint32_t p : {5U, 7U}) {
    const Graph h = kopparty(p, 1);
    const bool free = is_triangle_free(h).free;
    expect(r, free, "kopparty(" + std::to_string(p) + ",1) triangle-free");
    r.data["kopparty"].push_back(
        {{"p", p}, {"h", 1}, {"n", h.n()}, {"degree", h.max_degree()}, {"triangle_free", free}});
  }
}

void criterion_projective(CriterionResult& r) {
  for (std::uint32_t q : {5U, 7U, 9U, 11U, 13U, 25U}) {
    const Graph g = nonsquare_subgraph(ak_graph(2, Field::of_order(q)));
    const bool free = is_triangle_free(g).free;
    expect(r, free, "nonsquare AK(2," + std::to_string(q) + ") triangle-free");
    r.data["nonsquare_r2"].push_back({{"q", q}, {"n", g.n()}, {"triangle_free", free}});
  }
  for (std::uint32_t q : {3U, 5U, 7U}) {
    const Graph g = nonsquare_subgraph(ak_graph(4, Field::of_order(q)));
    const auto c = clique_number(g, 4);
    expect(r, c.number.has_value(), "nonsquare AK(4," + std::to_string(q) + ") clique <= 4");
    r.data["nonsquare_r4"].push_back(
        {{"q", q}, {"n", g.n()}, {"clique_number", c.number ? Json(*c.number) : Json(">4")}});
  }
  for (std::uint32_t q : {5U, 7U, 9U}) {
    const auto e = even_t_construction(4, Field::of_order(q));
    const auto c = clique_number(e.graph, 3);
    expect(r, c.number.has_value(), "even-t(4," + std::to_string(q) + ") clique <= 3");
    r.data["even_t4"].push_back({{"q", q},
                                 {"n", e.graph.n()},
                                 {"center", e.center},
                                 {"ratio", format_rational(e.ratio)},
                                 {"clique_number", c.number ? Json(*c.number) : Json(">3")}});
  }
}

std::vector<std::size_t> degree_multiset(const Graph& g) {
  std::vector<std::size_t> d(g.n());
  for (Vertex v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

void criterion_fingerprint(CriterionResult& r) {
  for (std::uint32_t q : {3U, 5U}) {
    const Field field = Field::of_order(q);
    const Graph ak3 = ak_graph(3, field);
    const Graph ak2 = ak_graph(2, field);
    const auto ref_degrees = degree_multiset(ak2);
    const auto ref_spectrum = spectrum_dense(ak2).eigenvalues;
    std::mt19937_64 rng(derive_seed(kSeed, q));
    std::set<Vertex> chosen;
    while (chosen.size() < 5) {
      chosen.insert(static_cast<Vertex>(rng() % ak3.n()));
    }
    for (auto v : chosen) {
      const Graph nb = induced(ak3, ak3.neighbor_set(v));
      const bool count = nb.n() == ak2.n();
      const bool edges = nb.edge_count() == ak2.edge_count();
      const bool degrees = degree_multiset(nb) == ref_degrees;
      const bool spectrum = count && same_spectrum(spectrum_dense(nb).eigenvalues, ref_spectrum, 1e-6);
      const std::string tag = "q=" + std::to_string(q) + " v=" + std::to_string(v);
      expect(r, count, tag + " vertex count");
      expect(r, edges, tag + " edge count");
      expect(r, degrees, tag + " degree multiset");
      expect(r, spectrum, tag + " spectrum");
      r.data["samples"].push_back({{"q", q}, {"vertex", v}, {"n", nb.n()},
                                   {"edges", nb.edge_count()}, {"degrees_match", degrees},
                                   {"spectrum_match", spectrum}});
    }
  }
}

void criterion_ordering(CriterionResult& r) {
  const Graph pet = petersen_pattern();
  const auto d2p = d2(pet);
  expect(r, d2p.d == Rational(3, 2), "d2(petersen) = 3/2");
  const auto cert = petersen_certificate();
  const auto cert_two = eval_dhat2(pet, cert);
  expect(r, cert_two == 2, "listed certificate evaluates to twoD = 2");
  const auto exact = dhat2(pet);
  expect(r, exact.d == Rational(1), "exhaustive dhat2(petersen) = 1");
  const Rational upper = exp_upper_from_two_d(exact.cert.two_d);
  expect(r, upper == Rational(2, 3), "exp_upper(petersen) = 2/3");
  r.data["petersen"] = {{"d2", format_rational(d2p.d)},
                        {"certificate_twoD", cert_two},
                        {"dhat2", format_rational(exact.d)},
                        {"dhat2_ordering", exact.cert.ordering},
                        {"dhat2_breakpoints", exact.cert.breakpoints},
                        {"exp_upper", format_rational(upper)}};
  for (std::size_t t : {3U, 4U, 5U}) {
    const auto d = d2(complete_graph(t)).d;
    expect(r, d == Rational(static_cast<std::int64_t>(t) - 2), "d2(K_" + std::to_string(t) + ") = t-2");
    r.data["complete"].push_back({{"t", t}, {"d2", format_rational(d)}});
  }
  std::size_t agree = 0;
  for (std::uint64_t i = 1; i <= 100; ++i) {
    const std::size_t m = 2 + i % 6;
    const Graph f = random_graph(m, Rational(1, 2), derive_seed(kSeed, i));
    const auto dp = d2(f).cert.two_d;
    const auto brute = oracle::d2_two(f);
    if (dp == brute) ++agree;
    expect(r, dp == brute, "subset program matches brute force on sample " + std::to_string(i));
  }
  r.data["random_agreement"] = agree;
}

void criterion_embedding(CriterionResult& r) {
  EmbedParams params;
  params.density = Rational(1, 2);
  std::size_t petersen_ok = 0;
  std::size_t general_ok = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = host_for_seed(seed);
    const auto pet = embed_petersen(g, params);
    const bool pv = pet.ok() && is_valid_embedding(g, petersen_pattern(), *pet.embedding);
    const auto gen = embed_general(g, petersen_pattern(), petersen_certificate(), params);
    const bool gv = gen.ok() && is_valid_embedding(g, petersen_pattern(), *gen.embedding);
    petersen_ok += pv;
    general_ok += gv;
    if (pv) expect(r, gv, "general embedder on seed " + std::to_string(seed));
    r.data["hosts"].push_back({{"seed", seed},
                               {"petersen", pv},
                               {"petersen_failed_stage", pet.failure ? Json(pet.failure->name) : Json()},
                               {"general", gv},
                               {"general_mode", gen.mode}});
  }
  expect(r, petersen_ok >= 9, "Petersen pipeline succeeds on >= 9 of 10 seeds");

  EmbedParams sparse;
  const Graph c13 = cubic_cayley(13);
  sparse.density = Rational(12, 169);
  const auto k3 = dhat2(complete_graph(3)).cert;
  const auto tri = embed_general(c13, complete_graph(3), k3, sparse);
  expect(r, !tri.ok(), "K3 into cubic_cayley(13) fails");
  r.data["k3_into_cubic13"] = {{"ok", tri.ok()},
                               {"stage", tri.failure ? Json(tri.failure->name) : Json()},
                               {"reason", tri.failure ? Json(tri.failure->reason) : Json()}};

  // Forest embedding against the exhaustive oracle on random small instances.
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::mt19937_64 rng(derive_seed(kSeed, 77));
  for (std::size_t n = 1; n <= 20; ++n) {
    for (std::size_t m = 1; m <= std::min<std::size_t>(5, n); ++m) {
      for (int rep = 0; rep < 8; ++rep) {
        const Rational density(1 + static_cast<std::int64_t>(rng() % 4), 5);
        const Graph g = random_graph(n, density, rng());
        GraphBuilder fb(m);
        for (std::size_t i = 1; i < m; ++i) {
          if (rng() % 4 != 0) fb.add_edge(static_cast<Vertex>(rng() % i), static_cast<Vertex>(i));
        }
        const Graph forest = std::move(fb).build();
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Bitset> sets(m, Bitset(n));
        for (std::size_t i = 0; i < m; ++i) sets[i].set(perm[i]);
        for (std::size_t i = m; i < n; ++i) {
          const auto slot = rng() % (m + 1);
          if (slot < m) sets[slot].set(perm[i]);
        }
        const bool truth = oracle::forest_feasible(g, forest, sets);
        bool got = false;
        try {
          const auto emb = embed_forest(g, forest, sets);
          got = is_valid_embedding(g, forest, emb);
          for (std::size_t i = 0; i < m; ++i) got = got && sets[i].test(emb.map[i]);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kCandidateExhausted) throw;
        }
        ++instances;
        if (got != truth) ++mismatches;
      }
    }
  }
  expect(r, mismatches == 0, "embed_forest agrees with the exhaustive oracle");
  r.data["petersen_successes"] = petersen_ok;
  r.data["general_successes"] = general_ok;
  r.data["forest_instances"] = instances;
  r.data["forest_mismatches"] = mismatches;
}

void criterion_mixing(CriterionResult& r) {
  std::size_t index = 0;
  for (const auto& entry : acceptance_catalog()) {
    const Graph g = entry.build();
    const auto d = g.regular_degree();
    ++index;
    if (!d) continue;
    const double lambda = lambda_nontrivial(g);
    const Rational density(static_cast<std::int64_t>(*d), static_cast<std::int64_t>(g.n()));
    const double disc = sample_discrepancy(g, density, 10000, derive_seed(kSeed, index));
    expect(r, disc <= lambda + 1e-6, entry.label() + " sampled discrepancy <= lambda");
    r.data["graphs"].push_back({{"construction", entry.label()}, {"n", g.n()},
                                {"lambda", lambda}, {"max_discrepancy", disc}});
  }
}

void criterion_distance(CriterionResult& r) {
  for (auto q : kDistanceQ) {
    const Graph g = distance_graph(Field::of_order(q));
    const bool k23 = is_k23_free(g).free;
    const bool tri = is_triangle_free(g).free;
    expect(r, k23, "distance graph q=" + std::to_string(q) + " K23-free");
    r.data["distance"].push_back({{"q", q}, {"n", g.n()}, {"degree", g.max_degree()},
                                  {"k23_free", k23}, {"triangle_free", tri}});
  }
  for (const auto& entry : acceptance_catalog()) {
    const Graph g = entry.build();
    const double lambda = lambda_nontrivial(g);
    const auto d = g.regular_degree();
    const double degree = d ? static_cast<double>(*d)
                            : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.n());
    r.data["optimality"].push_back({{"construction", entry.label()},
                                    {"regular", d.has_value()},
                                    {"degree", degree},
                                    {"lambda", lambda},
                                    {"ratio", lambda / std::sqrt(degree)}});
  }
}

}  // namespace

std::string CatalogEntry::label() const {
  std::string out = kind + "(";
  bool first = true;
  for (const auto& [key, value] : params.items()) {
    out += (first ? "" : ",") + key + "=" + value.dump();
    first = false;
  }
  return out + ")";
}

std::vector<CatalogEntry> acceptance_catalog() {
  std::vector<CatalogEntry> out;
  for (auto p : kCubicPrimes) {
    out.push_back({"cubic-cayley", Json{{"p", p}}, Field::make(p).describe(),
                   [p] { return cubic_cayley(p); }});
  }
  for (auto [p, h] : {std::pair{2U, 3U}, {5U, 1U}, {7U, 1U}}) {
    out.push_back({"kopparty", Json{{"p", p}, {"h", h}}, Field::make(p, h).describe(),
                   [p, h] { return kopparty(p, h); }});
  }
  for (std::uint32_t q : {5U, 7U, 9U, 11U, 13U, 25U}) {
    out.push_back(field_entry("nonsquare-ak", Json{{"r", 2}, {"q", q}}, q,
                              [](const Field& f) { return nonsquare_subgraph(ak_graph(2, f)); }));
  }
  for (std::uint32_t q : {3U, 5U, 7U}) {
    out.push_back(field_entry("nonsquare-ak", Json{{"r", 4}, {"q", q}}, q,
                              [](const Field& f) { return nonsquare_subgraph(ak_graph(4, f)); }));
  }
  for (std::uint32_t q : {5U, 7U, 9U}) {
    out.push_back(field_entry("even-t", Json{{"t", 4}, {"q", q}}, q,
                              [](const Field& f) { return even_t_construction(4, f).graph; }));
  }
  for (std::uint32_t q : {3U, 5U}) {
    out.push_back(field_entry("ak", Json{{"r", 3}, {"q", q}}, q,
                              [](const Field& f) { return ak_graph(3, f); }));
  }
  for (auto q : kDistanceQ) {
    out.push_back(field_entry("distance", Json{{"q", q}}, q,
                              [](const Field& f) { return distance_graph(f); }));
  }
  return out;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "cubic Cayley battery", "cubic-cayley-k3-k23-free-spectral", 60, criterion_cubic},
      {2, "Weil audit for cubic character sums", "weil-cubic-bound", 120, criterion_weil},
      {3, "Kopparty battery", "kopparty-triangle-free-induced-petersen", 600, criterion_kopparty},
      {4, "projective battery", "nonsquare-clique-free", 300, criterion_projective},
      {5, "neighborhood fingerprint of AK(3,q)", "ak-neighborhood-fingerprint", 600,
       criterion_fingerprint},
      {6, "ordering parameters", "petersen-ordering-parameters", 600, criterion_ordering},
      {7, "embedding engine", "jumbled-petersen-embedding", 600, criterion_embedding},
      {8, "mixing-lemma consistency", "mixing-lemma-discrepancy", 600, criterion_mixing},
      {9, "distance graph and optimality ratios", "distance-graph-k23-free", 600,
       criterion_distance},
  };
  return criteria;
}

std::vector<CriterionResult> run_acceptance(std::span<const int> only, std::size_t threads) {
  std::vector<const Criterion*> selected;
  for (const auto& c : acceptance_criteria()) {
    if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) {
      selected.push_back(&c);
    }
  }
  std::vector<CriterionResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const Criterion& c = *selected[i];
      CriterionResult& r = results[i];
      r.id = c.id;
      r.title = c.title;
      r.claim_id = c.claim_id;
      r.limit_seconds = c.limit_seconds;
      r.pass = true;
      const auto start = std::chrono::steady_clock::now();
      try {
        c.body(r);
      } catch (const std::exception& e) {
        r.pass = false;
        r.notes.push_back(std::string("exception: ") + e.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (r.seconds > r.limit_seconds) {
        r.pass = false;
        r.notes.push_back("runtime limit exceeded");
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, selected.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title
      << " (" << std::fixed << std::setprecision(1) << r.seconds << " s, limit "
      << std::setprecision(0) << r.limit_seconds << " s)";
  for (const auto& note : r.notes) out << "\n    " << note;
  return out.str();
}

Json to_json(const CriterionResult& r, bool timing) {
  Json j{{"criterion", r.id},
         {"claim_id", r.claim_id},
         {"title", r.title},
         {"result", r.pass ? "pass" : "fail"},
         {"notes", r.notes},
         {"data", r.data},
         {"version", kVersion},
         {"seed", kSeed}};
  if (timing) j["runtime_ms"] = static_cast<std::int64_t>(r.seconds * 1000);
  return j;
}

}  // namespace pseudoturan
