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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pseudoturan/graph.hpp"

namespace pseudoturan {

struct TriangleCheck {
  bool free = true;
  std::optional<std::array<Vertex, 3>> witness;  // lexicographically smallest
};

TriangleCheck is_triangle_free(const Graph& g);

struct K23Witness {
  Vertex u = 0;
  Vertex v = 0;
  std::array<Vertex, 3> common{};
};

struct K23Check {
  bool free = true;
  std::optional<K23Witness> witness;
};

// Free iff every pair of distinct vertices has at most two common neighbors.
K23Check is_k23_free(const Graph& g);

struct CliqueSearch {
  // Exact clique number when it is <= cap; empty means "> cap".
  std::optional<std::size_t> number;
  // A maximum clique, or a clique of size cap + 1 when number is empty.
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

// Branch and bound with greedy-coloring bounds over bitsets. cap >= 2.
CliqueSearch clique_number(const Graph& g, std::size_t cap);

enum class SearchStatus { kFound, kNotFound, kBudgetExceeded };

std::string to_string(SearchStatus s);

struct PatternSearch {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultPatternBudget = 100'000'000;
inline constexpr std::size_t kMaxPatternVertices = 16;

// Backtracking search for a copy of `pattern` in `host`. Every candidate
// assignment counts as one node against `budget`.
PatternSearch contains_pattern(const Graph& host, const Graph& pattern,
                               EmbedMode mode,
                               std::uint64_t budget = kDefaultPatternBudget);

}  // namespace pseudoturan
