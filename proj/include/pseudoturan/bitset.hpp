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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pseudoturan {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline std::size_t popcount_and(std::span<const Word> a,
                                std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

// Fixed-size dynamic bitset over vertex indices [0, size).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}
  Bitset(std::size_t size, std::span<const std::uint32_t> members)
      : Bitset(size) {
    for (auto v : members) set(v);
  }
  Bitset(std::size_t size, std::span<const Word> words)
      : size_(size), words_(words.begin(), words.end()) {}

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  std::size_t count_and(std::span<const Word> other) const {
    return popcount_and(words_, other);
  }

  Bitset& operator&=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) { return *this &= other.words(); }
  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Bitset& subtract(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other[i];
    return *this;
  }
  Bitset& subtract(const Bitset& other) { return subtract(other.words()); }

  // Smallest member >= from, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) {
        const std::size_t idx = wi * kWordBits + std::countr_zero(w);
        return idx < size_ ? idx : size_;
      }
      if (++wi >= words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        fn(static_cast<std::uint32_t>(wi * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace pseudoturan
