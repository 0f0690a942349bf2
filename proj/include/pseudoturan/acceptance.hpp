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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pseudoturan/graph.hpp"

namespace pseudoturan {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// A named construction instance used by the acceptance battery and the CLI.
struct CatalogEntry {
  std::string kind;  // e.g. "cubic-cayley"
  Json params;
  std::string field;  // field description, empty when not field-based
  std::function<Graph()> build;

  std::string label() const;
};

// Regular and irregular constructions exercised by the battery.
std::vector<CatalogEntry> acceptance_catalog();

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string claim_id;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::vector<std::string> notes;
  Json data = Json::object();
};

struct Criterion {
  int id;
  std::string title;
  std::string claim_id;
  double limit_seconds;
  std::function<void(CriterionResult&)> body;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs the selected criteria (all when `only` is empty) on up to `threads`
// workers; results come back in criterion order.
std::vector<CriterionResult> run_acceptance(std::span<const int> only = {},
                                            std::size_t threads = 1);

std::string summary_line(const CriterionResult& r);
Json to_json(const CriterionResult& r, bool timing);

}  // namespace pseudoturan
