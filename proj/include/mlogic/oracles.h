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

// Rank oracle building blocks. Derived matroids are built by layering these
// wrappers over a base oracle, so large structures never need a full table.

#ifndef MLOGIC_ORACLES_H_
#define MLOGIC_ORACLES_H_

#include <cstdint>
#include <functional>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mlogic/matroid.h"

namespace mlogic {

// Full rank table indexed by subset bitmask. Requires ground_size <= 24.
class TableOracle : public RankOracle {
 public:
  TableOracle(std::size_t ground_size, std::vector<std::uint8_t> table);
  std::size_t ground_size() const override { return n_; }
  int rank(const Subset& x) const override { return table_[x.to_mask()]; }
  int rank_of_mask(std::uint64_t mask) const { return table_[mask]; }
  const std::vector<std::uint8_t>& table() const { return table_; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> table_;
};

class FunctionOracle : public RankOracle {
 public:
  FunctionOracle(std::size_t ground_size,
                 std::function<int(const Subset&)> fn)
      : n_(ground_size), fn_(std::move(fn)) {}
  std::size_t ground_size() const override { return n_; }
  int rank(const Subset& x) const override { return fn_(x); }

 private:
  std::size_t n_;
  std::function<int(const Subset&)> fn_;
};

// r(X) = max over bases B of |X ∩ B|.
class BasesOracle : public RankOracle {
 public:
  BasesOracle(std::size_t ground_size, std::vector<Subset> bases);
  std::size_t ground_size() const override { return n_; }
  int rank(const Subset& x) const override;

 private:
  std::size_t n_;
  std::vector<Subset> bases_;
};

// X -> min(r(X), r(E) - 1).
class TruncationOracle : public RankOracle {
 public:
  explicit TruncationOracle(OraclePtr base);
  std::size_t ground_size() const override { return base_->ground_size(); }
  int rank(const Subset& x) const override;

 private:
  OraclePtr base_;
  int cap_;
};

// Adds one to the rank of each listed subset and leaves every other rank
// unchanged.
class RelaxationOracle : public RankOracle {
 public:
  RelaxationOracle(OraclePtr base, std::vector<Subset> relaxed);
  std::size_t ground_size() const override { return base_->ground_size(); }
  int rank(const Subset& x) const override;
  OraclePtr base() const { return base_; }

 private:
  OraclePtr base_;
  std::unordered_set<Subset, SubsetHash> relaxed_;
};

// Restriction to `kept` (old indices, in new declaration order) after
// contracting `contracted` (old universe): X -> r(X ∪ C) - r(C).
class MinorOracle : public RankOracle {
 public:
  MinorOracle(OraclePtr base, std::vector<std::size_t> kept,
              Subset contracted);
  std::size_t ground_size() const override { return kept_.size(); }
  int rank(const Subset& x) const override;

 private:
  OraclePtr base_;
  std::vector<std::size_t> kept_;
  Subset contracted_;
  int contracted_rank_;
};

// r(X) = r_a(X ∩ E_a) + r_b(X ∩ E_b), with E_a first in declaration order.
class DirectSumOracle : public RankOracle {
 public:
  DirectSumOracle(OraclePtr a, OraclePtr b);
  std::size_t ground_size() const override { return na_ + nb_; }
  int rank(const Subset& x) const override;

 private:
  OraclePtr a_;
  OraclePtr b_;
  std::size_t na_;
  std::size_t nb_;
};

// Query results cached in a hash map. Concurrent readers share a lock;
// inserts take it exclusively. Answers never depend on interleaving since the
// base oracle is deterministic.
class MemoOracle : public RankOracle {
 public:
  explicit MemoOracle(OraclePtr base) : base_(std::move(base)) {}
  std::size_t ground_size() const override { return base_->ground_size(); }
  int rank(const Subset& x) const override;
  std::size_t cached() const;

 private:
  OraclePtr base_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Subset, int, SubsetHash> cache_;
};

}  // namespace mlogic

#endif  // MLOGIC_ORACLES_H_
