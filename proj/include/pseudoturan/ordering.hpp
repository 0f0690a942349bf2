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
#include <string>
#include <vector>

#include "pseudoturan/graph.hpp"

namespace pseudoturan {

// Positions and breakpoints are 0-based. Interval s covers positions
// [breakpoints[s], breakpoints[s+1]) and the last interval runs through m-1.
struct OrderingCertificate {
  std::vector<Vertex> ordering;          // position -> vertex
  std::vector<std::size_t> breakpoints;  // strictly increasing, first is 0
  std::size_t two_d = 0;
  bool heuristic = false;

  friend bool operator==(const OrderingCertificate&,
                         const OrderingCertificate&) = default;
};

inline constexpr std::size_t kMaxSubsetDp = 24;
inline constexpr std::size_t kMaxExactDhat2 = 10;

// Max over edges of N_{<i}(v_i) + N_{<i}(v_j), i the earlier position.
std::size_t eval_d2(const Graph& f, std::span<const Vertex> ordering);

struct OrderingResult {
  Rational d{0};  // two_d / 2
  OrderingCertificate cert;
};

// Exact via a subset program; returns the lexicographically smallest optimal
// ordering with singleton intervals.
OrderingResult d2(const Graph& f);

enum class ViolationKind { kCross, kInterval };

struct Violation {
  ViolationKind kind = ViolationKind::kCross;
  Edge edge{};  // (earlier, later) vertices
  std::size_t interval = 0;
  std::size_t value = 0;
};

// Achieved 2d of a well-formed certificate. Throws IntervalNotForest when an
// interval contains a cycle (the cycle is listed in the message).
std::size_t eval_dhat2(const Graph& f, const OrderingCertificate& cert);

// First edge whose cost exceeds cert.two_d, in position order.
std::optional<Violation> find_violation(const Graph& f,
                                        const OrderingCertificate& cert);

struct BreakpointChoice {
  std::size_t two_d = 0;
  std::vector<std::size_t> breakpoints;
};

// Optimal interval split for a fixed ordering: minimal 2d, then fewest
// intervals, then lexicographically smallest breakpoints.
BreakpointChoice best_breakpoints(const Graph& f, std::span<const Vertex> ordering);

struct Dhat2Options {
  bool exact = true;  // requires m <= kMaxExactDhat2
  std::size_t restarts = 4000;
  std::uint64_t seed = 1;
};

OrderingResult dhat2(const Graph& f, const Dhat2Options& options = {});

// 1 - 1/(2d+1) = two_d / (two_d + 1).
Rational exp_upper_from_two_d(std::size_t two_d);
Rational exp_upper(const Graph& f);

// Single-tail reading used by the general embedder: positions before
// `tail` are charged by the cross rule, edges inside the tail at `tail`.
// Throws IntervalNotForest if the tail is not a forest.
std::size_t eval_tail(const Graph& f, std::span<const Vertex> ordering,
                      std::size_t tail);

void validate_ordering(const Graph& f, std::span<const Vertex> ordering);
void validate_certificate(const Graph& f, const OrderingCertificate& cert);

}  // namespace pseudoturan
