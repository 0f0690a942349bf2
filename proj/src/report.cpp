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

#include "pseudoturan/report.hpp"

#include <cmath>

#include "pseudoturan/constructions.hpp"
#include "pseudoturan/forbidden.hpp"

namespace pseudoturan {

namespace {

std::uint32_t need(const std::optional<std::uint32_t>& v, const char* flag,
                   const std::string& kind) {
  if (!v) fail(ErrorCode::kInvalidArgument, kind + " requires --" + flag);
  return *v;
}

}  // namespace

GraphSource build_construction(const std::string& kind, const ConstructionArgs& a) {
  GraphSource s;
  s.construction = kind;
  if (kind == "cubic-cayley") {
    const auto p = need(a.p, "p", kind);
    s.params = {{"p", p}};
    s.field = Field::make(p).describe();
    s.claim_id = "cubic-cayley-k3-k23-free-spectral";
    s.cayley = true;
    s.graph = cubic_cayley(p);
  } else if (kind == "kopparty") {
    const auto p = need(a.p, "p", kind);
    const auto h = a.h.value_or(1);
    s.params = {{"p", p}, {"h", h}};
    s.field = Field::make(p, h).describe();
    s.claim_id = "kopparty-triangle-free-induced-petersen";
    s.cayley = true;
    s.graph = kopparty(p, h);
  } else if (kind == "ak" || kind == "nonsquare-ak") {
    const auto r = need(a.r, "r", kind);
    const auto q = need(a.q, "q", kind);
    const Field field = Field::of_order(q);
    s.params = {{"r", r}, {"q", q}};
    s.field = field.describe();
    s.claim_id = "nonsquare-clique-free";
    s.graph = kind == "ak" ? ak_graph(r, field) : nonsquare_subgraph(ak_graph(r, field));
  } else if (kind == "even-t") {
    const auto t = need(a.t, "t", kind);
    const auto q = need(a.q, "q", kind);
    const Field field = Field::of_order(q);
    auto e = even_t_construction(t, field);
    s.params = {{"t", t}, {"q", q}, {"center", e.center}, {"ratio", format_rational(e.ratio)}};
    s.field = field.describe();
    s.claim_id = "even-t-clique-free";
    s.graph = std::move(e.graph);
  } else if (kind == "distance") {
    const auto q = need(a.q, "q", kind);
    const Field field = Field::of_order(q);
    s.params = {{"q", q}};
    s.field = field.describe();
    s.claim_id = "distance-graph-k23-free";
    s.graph = distance_graph(field);
  } else if (kind == "gnp") {
    if (!a.n) fail(ErrorCode::kInvalidArgument, "gnp requires --n");
    if (*a.n > kMaxConstructionVertices) {
      fail(ErrorCode::kTooLarge, "gnp is limited to 32768 vertices");
    }
    const Rational density = a.density.value_or(Rational(1, 2));
    s.params = {{"n", *a.n}, {"density", format_rational(density)}, {"seed", a.seed}};
    s.claim_id = "random-host";
    s.graph = random_graph(*a.n, density, a.seed);
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown construction '" + kind + "'");
  }
  return s;
}

GraphSource load_graph_file(const std::string& path) {
  GraphSource s;
  s.construction = "file";
  s.params = {{"path", path}};
  s.claim_id = "input-graph";
  s.graph = read_edge_list(std::filesystem::path(path));
  return s;
}

std::optional<Graph> named_pattern(const std::string& name) {
  if (name == "petersen") return petersen_pattern();
  if (name == "k23") return complete_bipartite(2, 3);
  if (name.size() == 2 && name[0] == 'k' && name[1] >= '3' && name[1] <= '6') {
    return complete_graph(static_cast<std::size_t>(name[1] - '0'));
  }
  if (name.size() >= 2 && name[0] == 'c') {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2) {
      const int len = std::stoi(digits);
      if (len >= 4 && len <= 10) return cycle_graph(static_cast<std::size_t>(len));
    }
  }
  return std::nullopt;
}

SpectralSummary summarize_spectrum(const GraphSource& source, const ConstructionArgs& args) {
  if (source.cayley) {
    if (source.construction == "cubic-cayley") return cayley_spectrum(cubic_cayley_spec(*args.p));
    return cayley_spectrum(
        kopparty_spec(Field::make(*args.p, args.h.value_or(1))));
  }
  const Graph& g = source.graph;
  if (g.n() <= kDenseCap) return spectrum_dense(g);
  SpectralSummary s;
  s.method = SpectralMethod::kIterative;
  s.lambda = lambda_iterative(g);
  s.lambda1 = static_cast<double>(g.max_degree());
  s.tolerance = 1e-7;
  return s;
}

Json spectrum_json(const SpectralSummary& s, bool with_eigenvalues) {
  Json j{{"lambda1", s.lambda1},
         {"lambda", s.lambda},
         {"method", to_string(s.method)},
         {"tolerance", s.tolerance}};
  if (s.method == SpectralMethod::kCharacterSum) j["max_imaginary"] = s.max_imaginary;
  if (with_eigenvalues) j["eigenvalues"] = s.eigenvalues;
  return j;
}

Json graph_report(const GraphSource& source, const ConstructionArgs& args,
                  const ReportOptions& options) {
  const Graph& g = source.graph;
  Json checks{{"triangle_free", is_triangle_free(g).free}, {"k23_free", is_k23_free(g).free}};
  if (options.clique_cap) {
    const auto c = clique_number(g, *options.clique_cap);
    checks["clique_cap"] = {{"cap", *options.clique_cap},
                            {"clique_number", c.number ? Json(*c.number)
                                                       : Json(">" + std::to_string(*options.clique_cap))},
                            {"within_cap", c.number.has_value()}};
  } else {
    checks["clique_cap"] = nullptr;
  }
  Json report{{"claim_id", source.claim_id},
              {"construction", source.construction},
              {"params", source.params},
              {"n", g.n()},
              {"degrees", {{"min", g.n() ? g.min_degree() : 0}, {"max", g.max_degree()}}},
              {"checks", checks}};
  if (options.spectrum && g.n() >= 2) {
    const auto s = summarize_spectrum(source, args);
    report["spectrum"] = spectrum_json(s, false);
    const auto d = g.regular_degree();
    const Rational p = d ? Rational(static_cast<std::int64_t>(*d), static_cast<std::int64_t>(g.n()))
                         : Rational(2 * static_cast<std::int64_t>(g.edge_count()),
                                    static_cast<std::int64_t>(g.n()) * static_cast<std::int64_t>(g.n()));
    // Irregular graphs use the deflated operator A - pJ.
    const double alpha = d ? s.lambda : lambda_nontrivial(g);
    report["jumbled"] = {{"p", format_rational(p)},
                         {"alpha", alpha},
                         {"provenance", to_string(CertProvenance::kEigenvalue)}};
  } else {
    report["spectrum"] = nullptr;
    report["jumbled"] = nullptr;
  }
  const bool tri = checks["triangle_free"].get<bool>();
  const bool k23 = checks["k23_free"].get<bool>();
  bool pass = true;
  if (source.claim_id == "cubic-cayley-k3-k23-free-spectral") pass = tri && k23;
  if (source.claim_id == "kopparty-triangle-free-induced-petersen") pass = tri;
  if (source.claim_id == "distance-graph-k23-free") pass = k23;
  if (options.clique_cap) pass = pass && checks["clique_cap"]["within_cap"].get<bool>();
  report["result"] = pass ? "pass" : "fail";
  report["version"] = kVersion;
  report["field"] = source.field.empty() ? Json(nullptr) : Json(source.field);
  report["seed"] = options.seed;
  return report;
}

}  // namespace pseudoturan
