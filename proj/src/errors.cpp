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

#include "pseudoturan/errors.hpp"

#include <charconv>

namespace pseudoturan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReducible: return "Reducible";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kAsymmetricSet: return "AsymmetricSet";
    case ErrorCode::kIdentityInSet: return "IdentityInSet";
    case ErrorCode::kBadCharacteristic: return "BadCharacteristic";
    case ErrorCode::kMissingLabels: return "MissingLabels";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kIsolatedVertexInV1: return "IsolatedVertexInV1";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kIrregular: return "Irregular";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kDegenerated: return "Degenerated";
    case ErrorCode::kCandidateExhausted: return "CandidateExhausted";
    case ErrorCode::kNotAForest: return "NotAForest";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kIntervalNotForest: return "IntervalNotForest";
    case ErrorCode::kNoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::kInvalidArgument, "not a number: " + std::string(s));
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 15) fail(ErrorCode::kInvalidArgument, "too many digits");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t w =
        whole.empty() || whole == "-" ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    const std::int64_t num = w * den + (negative ? -f : f);
    return Rational(num, den);
  }
  return Rational(parse_int(text));
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace pseudoturan
