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
#include <span>
#include <vector>

#include "pseudoturan/graph.hpp"

// Exhaustive reference implementations. They share no code with the search
// routines they check and are only meant for tiny inputs.
namespace pseudoturan::oracle {

// Minimum 2d over all m! orderings.
std::size_t d2_two(const Graph& f);

// Minimum 2d over all orderings and all 2^(m-1) breakpoint sets.
std::size_t dhat2_two(const Graph& f);

// Whether some map with f(i) in candidates[i] preserves the forest's edges
// and is injective.
bool forest_feasible(const Graph& g, const Graph& forest,
                     std::span<const Bitset> candidates);

// Largest clique by subset enumeration (n <= 24).
std::size_t clique_number(const Graph& g);

// Injective (induced) copy of pattern by trying all maps (tiny hosts only).
bool contains(const Graph& host, const Graph& pattern, EmbedMode mode);

bool triangle_free(const Graph& g);
bool k23_free(const Graph& g);

}  // namespace pseudoturan::oracle
