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

#include "mlogic/subset.h"

#include <algorithm>
#include <cassert>

#include "mlogic/errors.h"

namespace mlogic {

Subset::Subset(std::size_t universe_size)
    : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

Subset Subset::full(std::size_t universe_size) {
  Subset s(universe_size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

Subset Subset::from_mask(std::size_t universe_size, std::uint64_t mask) {
  assert(universe_size <= 64);
  Subset s(universe_size);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

Subset Subset::from_indices(std::size_t universe_size,
                            const std::vector<std::size_t>& indices) {
  Subset s(universe_size);
  for (std::size_t i : indices) {
    if (i >= universe_size) {
      throw DomainError("element index " + std::to_string(i) +
                        " outside universe of size " +
                        std::to_string(universe_size));
    }
    s.set(i);
  }
  return s;
}

void Subset::trim() {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

Subset& Subset::operator|=(const Subset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Subset& Subset::operator^=(const Subset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Subset Subset::complement() const {
  Subset s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Subset::first() const { return next(static_cast<std::size_t>(-1)); }

std::size_t Subset::next(std::size_t after) const {
  std::size_t start = after + 1;  // wraps to 0 for the sentinel
  for (std::size_t w = start >> 6; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    if (w == (start >> 6)) bits &= ~std::uint64_t{0} << (start & 63);
    if (bits != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    }
  }
  return size_;
}

std::string Subset::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  std::size_t digits = std::max<std::size_t>(1, (size_ + 3) / 4);
  out.reserve(digits);
  for (std::size_t d = digits; d-- > 0;) {
    std::size_t bit = d * 4;
    unsigned nibble = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (bit + k < size_ && test(bit + k)) nibble |= 1u << k;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

Subset Subset::from_hex(std::size_t universe_size, const std::string& hex) {
  std::string digits = hex;
  if (digits.size() > 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    digits = digits.substr(2);
  }
  if (digits.empty()) throw DomainError("empty hexadecimal subset mask");
  Subset s(universe_size);
  std::size_t bit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
    char c = *it;
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw DomainError("invalid hexadecimal digit '" + std::string(1, c) +
                        "' in subset mask " + hex);
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (!(v & (1u << k))) continue;
      if (bit + k >= universe_size) {
        throw DomainError("subset mask " + hex + " has bits outside a " +
                          std::to_string(universe_size) + "-element ground set");
      }
      s.set(bit + k);
    }
  }
  return s;
}

std::size_t Subset::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

bool operator<(const Subset& a, const Subset& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

}  // namespace mlogic
