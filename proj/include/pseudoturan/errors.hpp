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
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pseudoturan {

using Rational = boost::rational<std::int64_t>;

enum class ErrorCode {
  kInvalidArgument,
  kNotPrime,
  kReducible,
  kDegreeMismatch,
  kDivisionByZero,
  kEvenCharacteristic,
  kLoopEdge,
  kVertexOutOfRange,
  kIoError,
  kMalformedLine,
  kAsymmetricSet,
  kIdentityInSet,
  kBadCharacteristic,
  kMissingLabels,
  kEmptySet,
  kIsolatedVertexInV1,
  kDimensionMismatch,
  kTooLarge,
  kIrregular,
  kNotFound,
  kDegenerated,
  kCandidateExhausted,
  kNotAForest,
  kNotAPermutation,
  kIntervalNotForest,
  kNoConvergence,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Parses "3/7", "12", or a decimal such as "0.125" into an exact rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

}  // namespace pseudoturan
