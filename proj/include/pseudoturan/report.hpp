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
#include <optional>
#include <string>

#include "pseudoturan/acceptance.hpp"
#include "pseudoturan/graph.hpp"
#include "pseudoturan/spectral.hpp"

namespace pseudoturan {

struct ConstructionArgs {
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> h;
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> t;
  std::optional<std::size_t> n;
  std::optional<Rational> density;
  std::uint64_t seed = 1;
};

struct GraphSource {
  std::string construction;  // kind, or "file" / "named"
  Json params = Json::object();
  std::string field;  // empty when not field-based
  std::string claim_id;
  bool cayley = false;
  Graph graph;
};

// Kinds: cubic-cayley, kopparty, ak, nonsquare-ak, even-t, distance, gnp.
GraphSource build_construction(const std::string& kind, const ConstructionArgs& args);
GraphSource load_graph_file(const std::string& path);

// Registry: petersen, k3..k6, c4..c10, k23.
std::optional<Graph> named_pattern(const std::string& name);

// Spectrum by character sums for Cayley constructions, dense numerics up to
// kDenseCap vertices, Lanczos (lambda only) beyond.
SpectralSummary summarize_spectrum(const GraphSource& source, const ConstructionArgs& args);

struct ReportOptions {
  bool spectrum = true;
  std::optional<std::size_t> clique_cap;
  std::uint64_t seed = 1;
};

// Common report fields: claim_id, construction, params, n, degrees, checks,
// spectrum, jumbled, result, version, field, seed.
Json graph_report(const GraphSource& source, const ConstructionArgs& args,
                  const ReportOptions& options);

Json spectrum_json(const SpectralSummary& s, bool with_eigenvalues);

}  // namespace pseudoturan
