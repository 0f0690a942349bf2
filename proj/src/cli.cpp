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

#include "pseudoturan/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pseudoturan/acceptance.hpp"
#include "pseudoturan/constructions.hpp"
#include "pseudoturan/embedder.hpp"
#include "pseudoturan/forbidden.hpp"
#include "pseudoturan/ordering.hpp"
#include "pseudoturan/report.hpp"
#include "pseudoturan/spectral.hpp"

namespace pseudoturan {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct SourceFlags {
  std::string input;
  std::string construction;
  std::optional<std::uint32_t> p, h, q, r, t;
  std::optional<std::size_t> n;
  std::string density;
  std::uint64_t seed = 1;

  ConstructionArgs args() const {
    ConstructionArgs a;
    a.p = p;
    a.h = h;
    a.q = q;
    a.r = r;
    a.t = t;
    a.n = n;
    if (!density.empty()) a.density = parse_rational(density);
    a.seed = seed;
    return a;
  }

  GraphSource load() const {
    if (!input.empty() && !construction.empty()) {
      fail(ErrorCode::kInvalidArgument, "give either an input file or --construction");
    }
    if (!input.empty()) return load_graph_file(input);
    if (construction.empty()) {
      fail(ErrorCode::kInvalidArgument, "an input file or --construction is required");
    }
    return build_construction(construction, args());
  }
};

void add_params(CLI::App* sub, SourceFlags& s) {
  sub->add_option("--p", s.p, "Characteristic / prime");
  sub->add_option("--h", s.h, "Extension degree");
  sub->add_option("--q", s.q, "Field order");
  sub->add_option("--r", s.r, "Projective dimension");
  sub->add_option("--t", s.t, "Clique order for the even-t construction");
  sub->add_option("--n", s.n, "Vertex count for gnp");
  sub->add_option("--density", s.density, "Edge density as a rational, e.g. 1/2");
  sub->add_option("--seed", s.seed, "Seed")->capture_default_str();
}

void add_source(CLI::App* sub, SourceFlags& s) {
  sub->add_option("input", s.input, "Edge-list file");
  sub->add_option("--construction", s.construction,
                  "cubic-cayley | kopparty | ak | nonsquare-ak | even-t | distance | gnp");
  add_params(sub, s);
}

Rational host_density(const Graph& g) {
  if (const auto d = g.regular_degree()) {
    return Rational(static_cast<std::int64_t>(*d), static_cast<std::int64_t>(g.n()));
  }
  const auto n = static_cast<std::int64_t>(g.n());
  return Rational(2 * static_cast<std::int64_t>(g.edge_count()), n * n);
}

std::size_t worker_count() {
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PSEUDOTURAN_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) threads = std::min<std::size_t>(threads, static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      fail(ErrorCode::kInvalidArgument, "PSEUDOTURAN_THREADS must be a positive integer");
    }
  }
  return threads;
}

std::ostream& open_out(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary);
  if (!file) fail(ErrorCode::kIoError, "cannot write " + path);
  return file;
}

Json stage_json(const StageRecord& s) {
  return {{"stage", s.index}, {"name", s.name}, {"ok", s.ok},
          {"target", s.target}, {"size", s.size}, {"note", s.note}};
}

Json certificate_json(const OrderingCertificate& c) {
  return {{"ordering", c.ordering}, {"breakpoints", c.breakpoints},
          {"twoD", c.two_d}, {"d", format_rational(Rational(static_cast<std::int64_t>(c.two_d), 2))},
          {"heuristic", c.heuristic}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudorandom Turan toolkit: constructions, spectra, forbidden subgraphs, "
               "embeddings and ordering certificates"};
  // --h is a construction parameter, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // construct
  SourceFlags cons;
  std::string cons_kind, cons_out, cons_format = "edgelist";
  std::optional<std::size_t> cons_cap;
  bool cons_timing = false;
  auto* construct = app.add_subcommand("construct", "Build a construction");
  construct->add_option("kind", cons_kind, "Construction kind")->required();
  add_params(construct, cons);
  construct->add_option("--out", cons_out, "Output path (default stdout)");
  construct->add_option("--format", cons_format)->check(CLI::IsMember({"edgelist", "json"}));
  construct->add_option("--clique-cap", cons_cap, "Also bound the clique number");
  construct->add_flag("--timing", cons_timing, "Add runtime_ms to JSON output");

  // spectrum
  SourceFlags spec;
  bool spec_all = false;
  auto* spectrum = app.add_subcommand("spectrum", "Spectral summary and jumbledness certificate");
  add_source(spectrum, spec);
  spectrum->add_flag("--eigenvalues", spec_all, "Include the full spectrum");

  // forbid
  SourceFlags forb;
  std::string forb_pattern, forb_expect = "absent", forb_format = "text";
  bool forb_induced = false;
  std::uint64_t forb_budget = kDefaultPatternBudget;
  auto* forbid = app.add_subcommand("forbid", "Check that a graph avoids a pattern");
  add_source(forbid, forb);
  forbid->add_option("--pattern", forb_pattern,
                     "triangle | k23 | clique:N | petersen | k3..k6 | c4..c10 | file:<edgelist>")
      ->required();
  forbid->add_flag("--induced", forb_induced, "Search for induced copies");
  forbid->add_option("--budget", forb_budget, "Search node budget")->capture_default_str();
  forbid->add_option("--expect", forb_expect)->check(CLI::IsMember({"absent", "present"}));
  forbid->add_option("--format", forb_format)->check(CLI::IsMember({"text", "json"}));

  // embed
  SourceFlags emb;
  std::string emb_target = "petersen", emb_profile = "paper", emb_engine = "pipeline", emb_qm = "2";
  auto* embed = app.add_subcommand("embed", "Run the jumbled-graph embedding engine");
  add_source(embed, emb);
  embed->add_option("--target", emb_target, "petersen | file:<edgelist>")->capture_default_str();
  embed->add_option("--profile", emb_profile)->check(CLI::IsMember({"paper", "relaxed"}));
  embed->add_option("--engine", emb_engine, "pipeline (Petersen only) | general")
      ->check(CLI::IsMember({"pipeline", "general"}));
  embed->add_option("--qm", emb_qm, "Wide-vertex margin q > 1")->capture_default_str();

  // order
  std::string ord_named, ord_input;
  bool ord_exact = false, ord_heuristic = false;
  std::uint64_t ord_seed = 1;
  std::size_t ord_restarts = 4000;
  auto* order = app.add_subcommand("order", "Ordering parameters d2 and dhat2");
  order->add_option("input", ord_input, "Pattern edge-list file");
  order->add_option("--named", ord_named, "petersen | k3..k6 | c4..c10 | k23");
  auto* exact_flag = order->add_flag("--exact", ord_exact, "Exhaustive search (<= 10 vertices)");
  order->add_flag("--heuristic", ord_heuristic, "Randomized restarts")->excludes(exact_flag);
  order->add_option("--seed", ord_seed)->capture_default_str();
  order->add_option("--restarts", ord_restarts)->capture_default_str();

  // audit
  std::optional<std::uint32_t> audit_p;
  std::uint32_t audit_max = 199;
  auto* audit = app.add_subcommand("audit", "Cubic character-sum bound");
  audit->add_option("--p", audit_p, "Single prime");
  audit->add_option("--max", audit_max, "Audit all primes 5..max")->capture_default_str();

  // suite
  std::vector<int> suite_only;
  std::string suite_out;
  bool suite_timing = false;
  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("--only", suite_only, "Criterion ids")->delimiter(',');
  suite->add_option("--out", suite_out, "Newline-delimited JSON report");
  suite->add_flag("--timing", suite_timing, "Add runtime_ms to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) {
      const auto start = std::chrono::steady_clock::now();
      const auto args = cons.args();
      const GraphSource src = build_construction(cons_kind, args);
      std::ofstream file;
      std::ostream& sink = open_out(cons_out, file, out);
      if (cons_format == "edgelist") {
        write_edge_list(src.graph, sink);
        return kOk;
      }
      Json report = graph_report(src, args, {true, cons_cap, cons.seed});
      Json edges = Json::array();
      for (const auto& [u, v] : src.graph.edges()) edges.push_back({u, v});
      report["edges"] = std::move(edges);
      if (cons_timing) {
        report["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
      }
      sink << report.dump() << "\n";
      return report["result"] == "pass" ? kOk : kVerifyFailed;
    }

    if (*spectrum) {
      const auto args = spec.args();
      const GraphSource src = spec.load();
      Json report = graph_report(src, args, {true, std::nullopt, spec.seed});
      if (spec_all && src.graph.n() >= 2) {
        report["spectrum"] = spectrum_json(summarize_spectrum(src, args), true);
      }
      out << report.dump(2) << "\n";
      return kOk;
    }

    if (*forbid) {
      const auto args = forb.args();
      const GraphSource src = forb.load();
      const Graph& g = src.graph;
      Json verdict{{"pattern", forb_pattern}, {"mode", forb_induced ? "induced" : "subgraph"}};
      std::ostringstream text;
      bool present = false;
      bool undecided = false;
      if (forb_pattern.rfind("clique:", 0) == 0) {
        const int order_n = std::stoi(forb_pattern.substr(7));
        if (order_n < 3) fail(ErrorCode::kInvalidArgument, "clique order must be >= 3");
        const auto cap = static_cast<std::size_t>(order_n - 1);
        const auto c = clique_number(g, cap);
        present = !c.number;
        if (c.number) {
          text << "clique_number ≤ " << cap << "\nclique_number = " << *c.number << "\n";
          verdict["clique_number"] = *c.number;
        } else {
          text << "clique_number ≥ " << order_n << "\nwitness:";
          for (auto v : c.witness) text << " " << v;
          text << "\n";
        }
        verdict["witness"] = c.witness;
        verdict["nodes"] = c.nodes;
      } else if (forb_pattern == "triangle" && !forb_induced) {
        const auto t = is_triangle_free(g);
        present = !t.free;
        text << (t.free ? "triangle-free" : "triangle found:");
        if (t.witness) {
          for (auto v : *t.witness) text << " " << v;
          verdict["witness"] = *t.witness;
        }
        text << "\n";
      } else if (forb_pattern == "k23" && !forb_induced) {
        const auto t = is_k23_free(g);
        present = !t.free;
        if (t.witness) {
          text << "K23 found: " << t.witness->u << " " << t.witness->v << " |";
          for (auto c : t.witness->common) text << " " << c;
          text << "\n";
          verdict["witness"] = {{"pair", {t.witness->u, t.witness->v}}, {"common", t.witness->common}};
        } else {
          text << "K23-free\n";
        }
      } else {
        std::optional<Graph> pattern;
        if (forb_pattern.rfind("file:", 0) == 0) {
          pattern = read_edge_list(std::filesystem::path(forb_pattern.substr(5)));
        } else {
          pattern = named_pattern(forb_pattern == "triangle" ? "k3" : forb_pattern);
        }
        if (!pattern) fail(ErrorCode::kInvalidArgument, "unknown pattern '" + forb_pattern + "'");
        const auto mode = forb_induced ? EmbedMode::kInduced : EmbedMode::kSubgraph;
        const auto s = contains_pattern(g, *pattern, mode, forb_budget);
        present = s.status == SearchStatus::kFound;
        undecided = s.status == SearchStatus::kBudgetExceeded;
        verdict["status"] = to_string(s.status);
        verdict["nodes"] = s.nodes;
        const std::string mode_name = forb_induced ? "induced" : "subgraph";
        if (present) {
          text << forb_pattern << " found (" << mode_name << "):";
          for (auto v : s.embedding->map) text << " " << v;
          text << "\n";
          verdict["embedding"] = s.embedding->map;
        } else if (undecided) {
          text << "undecided: node budget of " << forb_budget << " exhausted\n";
        } else {
          text << forb_pattern << "-free (" << mode_name << ")\n";
        }
      }
      const bool ok = !undecided && (present == (forb_expect == "present"));
      verdict["present"] = present;
      verdict["undecided"] = undecided;
      if (forb_format == "json") {
        Json report = graph_report(src, args, {false, std::nullopt, forb.seed});
        report["forbid"] = verdict;
        report["result"] = ok ? "pass" : "fail";
        out << report.dump(2) << "\n";
      } else {
        out << text.str();
      }
      return ok ? kOk : kVerifyFailed;
    }

    if (*embed) {
      const GraphSource src = emb.load();
      const Graph& g = src.graph;
      EmbedParams params;
      params.density = emb.density.empty() ? host_density(g) : parse_rational(emb.density);
      params.fractions = FractionProfile::named(emb_profile);
      params.q_margin = parse_rational(emb_qm);
      EmbedOutcome outcome;
      Graph target = petersen_pattern();
      std::optional<OrderingCertificate> cert;
      if (emb_target == "petersen") {
        if (emb_engine == "general") cert = OrderingCertificate{{0, 2, 5, 8, 1, 3, 4, 6, 7, 9}, {0, 4}, 2};
      } else if (emb_target.rfind("file:", 0) == 0) {
        target = read_edge_list(std::filesystem::path(emb_target.substr(5)));
        Dhat2Options options;
        options.exact = target.n() <= kMaxExactDhat2;
        options.seed = emb.seed;
        cert = dhat2(target, options).cert;
      } else {
        fail(ErrorCode::kInvalidArgument, "unknown target '" + emb_target + "'");
      }
      outcome = cert ? embed_general(g, target, *cert, params) : embed_petersen(g, params);
      for (const auto& s : outcome.trace) out << stage_json(s).dump() << "\n";
      Json final{{"claim_id", "jumbled-petersen-embedding"},
                 {"construction", src.construction},
                 {"params", src.params},
                 {"n", g.n()},
                 {"density", format_rational(params.density)},
                 {"profile", emb_profile},
                 {"mode", outcome.mode},
                 {"result", outcome.ok() ? "pass" : "fail"}};
      if (cert) final["certificate"] = certificate_json(*cert);
      if (outcome.ok()) final["embedding"] = outcome.embedding->map;
      if (outcome.failure) {
        final["failed_stage"] = {{"index", outcome.failure->stage},
                                 {"name", outcome.failure->name},
                                 {"reason", outcome.failure->reason}};
      }
      final["version"] = kVersion;
      final["field"] = src.field.empty() ? Json(nullptr) : Json(src.field);
      final["seed"] = emb.seed;
      out << final.dump() << "\n";
      return outcome.ok() ? kOk : kVerifyFailed;
    }

    if (*order) {
      if (ord_named.empty() == ord_input.empty()) {
        fail(ErrorCode::kInvalidArgument, "give exactly one of --named or an input file");
      }
      Graph f;
      if (!ord_named.empty()) {
        auto named = named_pattern(ord_named);
        if (!named) fail(ErrorCode::kInvalidArgument, "unknown pattern '" + ord_named + "'");
        f = std::move(*named);
      } else {
        f = read_edge_list(std::filesystem::path(ord_input));
      }
      Dhat2Options options;
      options.exact = ord_exact || (!ord_heuristic && f.n() <= kMaxExactDhat2);
      options.seed = ord_seed;
      options.restarts = ord_restarts;
      const auto hat = dhat2(f, options);
      Json report{{"claim_id", "ordering-upper-bound"},
                  {"pattern", ord_named.empty() ? ord_input : ord_named},
                  {"m", f.n()},
                  {"edges", f.edge_count()}};
      if (f.n() <= kMaxSubsetDp) {
        const auto plain = d2(f);
        report["d2"] = certificate_json(plain.cert);
      } else {
        report["d2"] = nullptr;
      }
      report["dhat2"] = certificate_json(hat.cert);
      report["exp_upper"] = format_rational(exp_upper_from_two_d(hat.cert.two_d));
      report["exact"] = options.exact;
      report["version"] = kVersion;
      report["seed"] = ord_seed;
      out << report.dump(2) << "\n";
      return kOk;
    }

    if (*audit) {
      bool all = true;
      std::vector<std::uint32_t> primes;
      if (audit_p) {
        primes.push_back(*audit_p);
      } else {
        for (std::uint32_t p = 5; p <= audit_max; ++p) {
          if (is_prime(p)) primes.push_back(p);
        }
      }
      for (auto p : primes) {
        const auto a = weil_audit(p);
        all = all && a.holds;
        out << Json{{"claim_id", "weil-cubic-bound"}, {"p", a.p}, {"max_abs", a.max_abs},
                    {"argmax", {a.arg_a1, a.arg_a2}}, {"bound", a.bound},
                    {"result", a.holds ? "pass" : "fail"}, {"version", kVersion}}
                   .dump()
            << "\n";
      }
      return all ? kOk : kVerifyFailed;
    }

    if (*suite) {
      for (auto id : suite_only) {
        if (id < 1 || id > static_cast<int>(acceptance_criteria().size())) {
          fail(ErrorCode::kInvalidArgument, "no criterion " + std::to_string(id));
        }
      }
      const auto results = run_acceptance(suite_only, worker_count());
      std::ofstream file;
      std::ostream* report = nullptr;
      if (!suite_out.empty()) report = &open_out(suite_out, file, out);
      std::size_t passed = 0;
      for (const auto& r : results) {
        out << summary_line(r) << "\n";
        passed += r.pass;
        if (report) *report << to_json(r, suite_timing).dump() << "\n";
      }
      const bool all = passed == results.size();
      if (report) {
        *report << Json{{"suite", "acceptance"}, {"passed", passed}, {"total", results.size()},
                        {"result", all ? "pass" : "fail"}, {"version", kVersion}}
                       .dump()
                << "\n";
      }
      return all ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace pseudoturan
