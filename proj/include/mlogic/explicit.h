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

#ifndef MLOGIC_EXPLICIT_H_
#define MLOGIC_EXPLICIT_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "mlogic/matroid.h"
#include "mlogic/oracles.h"

namespace mlogic {

inline constexpr std::size_t kMaxMaterializedElements = 24;

// A matroid with its full rank table in memory, indexed by bitmask.
class ExplicitMatroid {
 public:
  enum class Check { kValidate, kSkip };

  // Validates the rank axioms unless told to skip (ValidationError).
  ExplicitMatroid(std::shared_ptr<const GroundSet> ground,
                  std::vector<std::uint8_t> table, Check check = Check::kValidate);

  // Throws ResourceError above kMaxMaterializedElements.
  static ExplicitMatroid materialize(const Matroid& m);

  std::size_t size() const { return ground_->size(); }
  const GroundSet& ground() const { return *ground_; }
  int rank(std::uint64_t mask) const { return oracle_->rank_of_mask(mask); }
  const std::vector<std::uint8_t>& table() const { return oracle_->table(); }
  // Shares the table; no copy.
  const Matroid& matroid() const { return matroid_; }

 private:
  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const TableOracle> oracle_;
  Matroid matroid_;
};

// Rank table of m (ResourceError above kMaxMaterializedElements).
std::vector<std::uint8_t> rank_table(const Matroid& m);

}  // namespace mlogic

#endif  // MLOGIC_EXPLICIT_H_
