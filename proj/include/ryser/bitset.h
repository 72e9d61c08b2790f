// Copyright 2026 The ryserkit Authors
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

#ifndef RYSER_BITSET_H_
#define RYSER_BITSET_H_

#include <bit>
#include <cstdint>
#include <vector>

namespace ryser {

// Fixed-width dynamic bitset used for edge sets inside the solvers.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset Full(int size) {
    Bitset b(size);
    for (int i = 0; i < size; ++i) b.Set(i);
    return b;
  }

  int size() const { return size_; }
  bool Test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void Set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void Reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  bool Empty() const {
    for (uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }
  int Count() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  // Lowest set bit, or -1.
  int First() const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    }
    return -1;
  }
  // Lowest set bit strictly above `i`, or -1.
  int Next(int i) const {
    ++i;
    if (i >= size_) return -1;
    size_t w = i >> 6;
    uint64_t word = words_[w] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (word) return static_cast<int>(w * 64) + std::countr_zero(word);
      if (++w == words_.size()) return -1;
      word = words_[w];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // this &= ~o
  Bitset& Subtract(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  bool Intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  // Only meaningful when size() <= 64.
  uint64_t Word0() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace ryser

#endif  // RYSER_BITSET_H_
