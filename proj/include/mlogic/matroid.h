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

#ifndef MLOGIC_MATROID_H_
#define MLOGIC_MATROID_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mlogic/ground_set.h"
#include "mlogic/subset.h"

namespace mlogic {

// Answers r(X) for subsets X of a fixed-size ground set. Implementations are
// immutable after construction and safe to query from several threads.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual std::size_t ground_size() const = 0;
  // X must have universe_size() == ground_size(); callers check this.
  virtual int rank(const Subset& x) const = 0;
};

using OraclePtr = std::shared_ptr<const RankOracle>;

// A structure (E, r): a ground set plus a rank oracle. Nothing here forces r
// to satisfy the rank axioms; see validate.h for that. The name reflects the
// intended use.
class Matroid {
 public:
  Matroid() = default;
  // Throws ValidationError if the oracle size disagrees with the ground set,
  // or if declared_rank is present and differs from r(E).
  Matroid(std::shared_ptr<const GroundSet> ground, OraclePtr oracle,
          std::optional<int> declared_rank = std::nullopt);

  const GroundSet& ground() const { return *ground_; }
  const std::shared_ptr<const GroundSet>& ground_ptr() const { return ground_; }
  const OraclePtr& oracle() const { return oracle_; }
  std::size_t size() const { return ground_->size(); }
  std::optional<int> declared_rank() const { return declared_rank_; }

  // Throws DomainError when x is over a different universe.
  int rank(const Subset& x) const;
  // Throws DomainError naming the first unknown element.
  int rank(const std::vector<std::string>& names) const;
  int full_rank() const { return full_rank_; }

  bool is_independent(const Subset& x) const {
    return rank(x) == static_cast<int>(x.count());
  }

  // Same structure with a thread-safe memo table in front of the oracle.
  Matroid memoized() const;

 private:
  std::shared_ptr<const GroundSet> ground_;
  OraclePtr oracle_;
  std::optional<int> declared_rank_;
  int full_rank_ = 0;
};

}  // namespace mlogic

#endif  // MLOGIC_MATROID_H_
