// Copyright 2026 The hyperpath Authors
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
#include <bit>
#include <cstddef>
#include <cstdint>

namespace hyperpath {

/// Fixed-capacity bitset over `Words * 64` candidate indices, used by the
/// search kernels. Unlike std::bitset it exposes word-level scanning
/// (first set bit, ordered iteration) which the branch-and-bound code needs.
template <std::size_t Words>
class FixedBitset {
 public:
  static constexpr std::size_t kBits = Words * 64;
  static constexpr std::size_t npos = kBits;

  constexpr FixedBitset() = default;

  static FixedBitset first_n(std::size_t n) {
    FixedBitset b;
    for (std::size_t w = 0; w < Words && n > 0; ++w) {
      if (n >= 64) {
        b.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        b.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return b;
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t first() const {
    for (std::size_t w = 0; w < Words; ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return npos;
  }

  // Clears every index <= i.
  void clear_through(std::size_t i) {
    const std::size_t w = i >> 6;
    for (std::size_t j = 0; j < w && j < Words; ++j) words_[j] = 0;
    if (w < Words) {
      const std::size_t b = i & 63;
      words_[w] &= (b == 63) ? 0 : (~std::uint64_t{0} << (b + 1));
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t x = words_[w];
      while (x != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  FixedBitset& operator&=(const FixedBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  FixedBitset& operator|=(const FixedBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  FixedBitset& and_not(const FixedBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend FixedBitset operator&(FixedBitset a, const FixedBitset& b) { return a &= b; }
  friend FixedBitset operator|(FixedBitset a, const FixedBitset& b) { return a |= b; }
  friend bool operator==(const FixedBitset&, const FixedBitset&) = default;

  bool intersects(const FixedBitset& o) const {
    for (std::size_t w = 0; w < Words; ++w) {
      if ((words_[w] & o.words_[w]) != 0) return true;
    }
    return false;
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

}  // namespace hyperpath
