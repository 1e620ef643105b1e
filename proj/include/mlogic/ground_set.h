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

#ifndef MLOGIC_GROUND_SET_H_
#define MLOGIC_GROUND_SET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mlogic/subset.h"

namespace mlogic {

// An ordered list of distinct, nonempty element names. Subsets of the ground
// set are bitmasks over this declaration order.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws ValidationError on empty, duplicate or whitespace-containing names.
  explicit GroundSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws DomainError naming the element when it is absent.
  std::size_t index_of(std::string_view name) const;
  Subset subset(const std::vector<std::string>& names) const;

  Subset none() const { return Subset(size()); }
  Subset all() const { return Subset::full(size()); }

  // "{a, b, c}" in declaration order.
  std::string format(const Subset& s) const;
  // "a b c" in declaration order.
  std::string join(const Subset& s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace mlogic

#endif  // MLOGIC_GROUND_SET_H_
