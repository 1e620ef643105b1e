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

#include "mlogic/matroid.h"

#include <algorithm>
#include <mutex>

#include "mlogic/errors.h"
#include "mlogic/oracles.h"

namespace mlogic {

Matroid::Matroid(std::shared_ptr<const GroundSet> ground, OraclePtr oracle,
                 std::optional<int> declared_rank)
    : ground_(std::move(ground)),
      oracle_(std::move(oracle)),
      declared_rank_(declared_rank) {
  if (!ground_ || !oracle_) throw ValidationError("matroid needs an oracle");
  if (oracle_->ground_size() != ground_->size()) {
    throw ValidationError("oracle covers " +
                          std::to_string(oracle_->ground_size()) +
                          " elements but the ground set has " +
                          std::to_string(ground_->size()));
  }
  full_rank_ = oracle_->rank(ground_->all());
  if (declared_rank_ && *declared_rank_ != full_rank_) {
    throw ValidationError("declared rank " + std::to_string(*declared_rank_) +
                          " differs from r(E) = " + std::to_string(full_rank_));
  }
}

int Matroid::rank(const Subset& x) const {
  if (x.universe_size() != size()) {
    throw DomainError("subset over " + std::to_string(x.universe_size()) +
                      " elements queried on a " + std::to_string(size()) +
                      "-element ground set");
  }
  return oracle_->rank(x);
}

int Matroid::rank(const std::vector<std::string>& names) const {
  return oracle_->rank(ground_->subset(names));
}

Matroid Matroid::memoized() const {
  if (std::dynamic_pointer_cast<const MemoOracle>(oracle_) ||
      std::dynamic_pointer_cast<const TableOracle>(oracle_)) {
    return *this;
  }
  return Matroid(ground_, std::make_shared<MemoOracle>(oracle_),
                 declared_rank_);
}

// --- oracles ---------------------------------------------------------------

TableOracle::TableOracle(std::size_t ground_size,
                         std::vector<std::uint8_t> table)
    : n_(ground_size), table_(std::move(table)) {
  if (n_ > 24) {
    throw ResourceError("rank tables are limited to 24 elements, got " +
                        std::to_string(n_));
  }
  if (table_.size() != (std::size_t{1} << n_)) {
    throw ValidationError("rank table for " + std::to_string(n_) +
                          " elements needs " +
                          std::to_string(std::size_t{1} << n_) +
                          " entries, got " + std::to_string(table_.size()));
  }
}

BasesOracle::BasesOracle(std::size_t ground_size, std::vector<Subset> bases)
    : n_(ground_size), bases_(std::move(bases)) {
  if (bases_.empty()) throw ValidationError("a matroid has at least one basis");
  for (const auto& b : bases_) {
    if (b.universe_size() != n_) {
      throw DomainError("basis over the wrong ground set");
    }
  }
}

int BasesOracle::rank(const Subset& x) const {
  std::size_t best = 0;
  for (const auto& b : bases_) best = std::max(best, (x & b).count());
  return static_cast<int>(best);
}

TruncationOracle::TruncationOracle(OraclePtr base) : base_(std::move(base)) {
  int r = base_->rank(Subset::full(base_->ground_size()));
  if (r < 1) throw ValidationError("cannot truncate a rank-0 matroid");
  cap_ = r - 1;
}

int TruncationOracle::rank(const Subset& x) const {
  return std::min(base_->rank(x), cap_);
}

RelaxationOracle::RelaxationOracle(OraclePtr base, std::vector<Subset> relaxed)
    : base_(std::move(base)), relaxed_(relaxed.begin(), relaxed.end()) {}

int RelaxationOracle::rank(const Subset& x) const {
  int r = base_->rank(x);
  return relaxed_.count(x) ? r + 1 : r;
}

MinorOracle::MinorOracle(OraclePtr base, std::vector<std::size_t> kept,
                         Subset contracted)
    : base_(std::move(base)),
      kept_(std::move(kept)),
      contracted_(std::move(contracted)) {
  contracted_rank_ = base_->rank(contracted_);
}

int MinorOracle::rank(const Subset& x) const {
  Subset lifted = contracted_;
  x.for_each([&](std::size_t i) { lifted.set(kept_[i]); });
  return base_->rank(lifted) - contracted_rank_;
}

DirectSumOracle::DirectSumOracle(OraclePtr a, OraclePtr b)
    : a_(std::move(a)),
      b_(std::move(b)),
      na_(a_->ground_size()),
      nb_(b_->ground_size()) {}

int DirectSumOracle::rank(const Subset& x) const {
  Subset xa(na_);
  Subset xb(nb_);
  x.for_each([&](std::size_t i) {
    if (i < na_) {
      xa.set(i);
    } else {
      xb.set(i - na_);
    }
  });
  return a_->rank(xa) + b_->rank(xb);
}

int MemoOracle::rank(const Subset& x) const {
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
  }
  int r = base_->rank(x);
  std::unique_lock lock(mu_);
  cache_.emplace(x, r);
  return r;
}

std::size_t MemoOracle::cached() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

}  // namespace mlogic
