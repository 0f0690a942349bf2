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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pseudoturan/graph.hpp"
#include "pseudoturan/ordering.hpp"

namespace pseudoturan {

// Multipliers for every stage of the Petersen pipeline. Set sizes are
// ceil(multiplier * target) capped by what is available.
struct FractionProfile {
  Rational v1_degree{1, 2};    // deg(v1) and |X| against p*n
  Rational retention{9, 10};   // expected share kept by cleaning
  Rational z78{9, 200};        // |Z78| against p*n
  Rational w_share{2, 5};      // expected |W| against n (reported only)
  Rational w_degree{1, 500};   // neighbors in Z78 against p^2*n
  Rational z7{1, 1000};        // |Z7|, |Z8| against p^2*n
  Rational z2{1, 50};          // |Z2|, |Z4| against p^2*n
  Rational clean{1, 10};       // cleaning threshold against p*|other side|

  static FractionProfile paper() { return {}; }
  static FractionProfile relaxed();
  static FractionProfile named(const std::string& name);
};

struct EmbedParams {
  Rational density{1, 2};
  FractionProfile fractions;
  Rational q_margin{2};

  void validate() const;
};

// Smallest v in x with at least ((qm-1)/qm)*p*|Y_i| neighbors in every Y_i.
// Throws NotFound when no vertex qualifies.
Vertex find_wide_vertex(const Graph& g, const Bitset& x, std::span<const Bitset> ys,
                        const Rational& p, const Rational& qm);

struct CleanResult {
  Bitset x;
  Bitset y;
  bool x_retained = false;  // |X'| >= 9|X|/10
  bool y_retained = false;
  std::size_t removed = 0;
};

// Peels vertices below fraction*p*|other side| neighbors, smallest index
// first, until none remain. Throws Degenerated if a side empties.
CleanResult clean_pair(const Graph& g, const Bitset& x, const Bitset& y,
                       const Rational& p, const Rational& fraction = Rational(1, 10));

// Leaf-stripping embedding of a forest with pairwise disjoint candidate sets.
// Throws NotAForest, or CandidateExhausted naming the emptied vertex.
Embedding embed_forest(const Graph& g, const Graph& forest,
                       std::span<const Bitset> candidates);

struct StageRecord {
  std::size_t index = 0;
  std::string name;
  bool ok = true;
  std::size_t target = 0;
  std::size_t size = 0;
  std::string note;
};

struct StageFailure {
  std::size_t stage = 0;
  std::string name;
  std::string reason;
};

struct EmbedOutcome {
  std::optional<Embedding> embedding;
  std::optional<StageFailure> failure;
  std::vector<StageRecord> trace;
  std::string mode;

  bool ok() const { return embedding.has_value(); }
};

// Pattern vertex i of petersen_pattern() is host vertex embedding->map[i].
EmbedOutcome embed_petersen(const Graph& g, const EmbedParams& params);

struct PreconditionReport {
  double alpha_bound = 0;  // p^2 n / 200
  bool alpha_ok = false;
  double density_bound = 0;  // 10 n^{-1/3}
  bool density_ok = false;   // p >= 10 n^{-1/3}, decided exactly
  double pair_lhs = 0;       // 4 (alpha/p)^2
  double pair_rhs = 0;       // p^2 n^2 / 5000
  bool pair_ok = false;
};

PreconditionReport check_theorem_preconditions(std::uint64_t n, const Rational& p,
                                               double alpha);

// Greedy prefix plus forest tail when the certificate's single-tail reading
// fits its two_d; otherwise an experimental interval-by-interval mode.
EmbedOutcome embed_general(const Graph& g, const Graph& f,
                           const OrderingCertificate& cert, const EmbedParams& params);

}  // namespace pseudoturan
