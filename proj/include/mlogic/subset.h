// Copyright 2026 The Authors.
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

#ifndef MLOGIC_SUBSET_H_
#define MLOGIC_SUBSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mlogic {

// A subset of {0, ..., universe_size - 1}, stored as a bitmask. Bit i refers
// to the i-th element of a GroundSet in declaration order. Bits at positions
// >= universe_size are always zero.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe_size);

  static Subset full(std::size_t universe_size);
  // Requires universe_size <= 64.
  static Subset from_mask(std::size_t universe_size, std::uint64_t mask);
  static Subset from_indices(std::size_t universe_size,
                             const std::vector<std::size_t>& indices);

  std::size_t universe_size() const { return size_; }
  std::size_t count() const;
  bool empty() const;
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator^=(const Subset& other);
  // Set difference.
  Subset& operator-=(const Subset& other);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator^(Subset a, const Subset& b) { return a ^= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  Subset complement() const;
  Subset with(std::size_t i) const {
    Subset s = *this;
    s.set(i);
    return s;
  }
  Subset without(std::size_t i) const {
    Subset s = *this;
    s.reset(i);
    return s;
  }

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  // Low 64 bits. Exact only when universe_size <= 64.
  std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<std::size_t> elements() const;
  // Lowest element, or universe_size() if empty.
  std::size_t first() const;
  std::size_t next(std::size_t after) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // Lowercase hexadecimal, most significant digit first, no prefix.
  std::string to_hex() const;
  static Subset from_hex(std::size_t universe_size, const std::string& hex);

  std::size_t hash() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  // Orders by universe size, then numerically by bitmask value.
  friend bool operator<(const Subset& a, const Subset& b);

 private:
  void trim();

  std::size_t size_ = 0;
  boost::container::small_vector<std::uint64_t, 4> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace mlogic

#endif  // MLOGIC_SUBSET_H_
