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

#include "mlogic/operations.h"

#include "mlogic/errors.h"
#include "mlogic/oracles.h"

namespace mlogic {
namespace {

void require_universe(const Matroid& m, const Subset& x) {
  if (x.universe_size() != m.size()) {
    throw DomainError("subset over " + std::to_string(x.universe_size()) +
                      " elements used with a " + std::to_string(m.size()) +
                      "-element matroid");
  }
}

std::shared_ptr<const GroundSet> sub_ground(const GroundSet& g,
                                            const std::vector<std::size_t>& idx) {
  std::vector<std::string> names;
  names.reserve(idx.size());
  for (std::size_t i : idx) names.push_back(g.name(i));
  return std::make_shared<const GroundSet>(std::move(names));
}

}  // namespace

Matroid truncate(const Matroid& m) {
  if (m.full_rank() < 1) {
    throw ValidationError("truncation of a rank-0 matroid is undefined");
  }
  return Matroid(m.ground_ptr(),
                 std::make_shared<TruncationOracle>(m.oracle()));
}

Matroid relax(const Matroid& m, const Subset& c, bool force) {
  require_universe(m, c);
  if (!force && !is_circuit_hyperplane(m, c)) {
    throw ValidationError(m.ground().format(c) +
                          " is not a circuit-hyperplane; refusing to relax");
  }
  return Matroid(m.ground_ptr(), std::make_shared<RelaxationOracle>(
                                     m.oracle(), std::vector<Subset>{c}));
}

Matroid restrict_to(const Matroid& m, const Subset& keep) {
  require_universe(m, keep);
  auto kept = keep.elements();
  auto ground = sub_ground(m.ground(), kept);
  return Matroid(ground, std::make_shared<MinorOracle>(m.oracle(), kept,
                                                       Subset(m.size())));
}

Matroid delete_elements(const Matroid& m, const Subset& d) {
  require_universe(m, d);
  return restrict_to(m, d.complement());
}

Matroid contract(const Matroid& m, const Subset& c) {
  require_universe(m, c);
  auto kept = c.complement().elements();
  auto ground = sub_ground(m.ground(), kept);
  return Matroid(ground, std::make_shared<MinorOracle>(m.oracle(), kept, c));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> names = a.ground().names();
  names.insert(names.end(), b.ground().names().begin(),
               b.ground().names().end());
  return Matroid(std::make_shared<const GroundSet>(std::move(names)),
                 std::make_shared<DirectSumOracle>(a.oracle(), b.oracle()));
}

Matroid relabel(const Matroid& a, const std::vector<std::size_t>& perm,
                std::shared_ptr<const GroundSet> target) {
  if (perm.size() != a.size() || target->size() != a.size()) {
    throw DomainError("relabeling must be a bijection between ground sets");
  }
  std::vector<std::size_t> inverse(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || inverse[perm[i]] != perm.size()) {
      throw DomainError("relabeling is not a permutation");
    }
    inverse[perm[i]] = i;
  }
  OraclePtr base = a.oracle();
  std::size_t n = a.size();
  auto fn = [base, inverse, n](const Subset& y) {
    Subset x(n);
    y.for_each([&](std::size_t j) { x.set(inverse[j]); });
    return base->rank(x);
  };
  return Matroid(std::move(target),
                 std::make_shared<FunctionOracle>(n, std::move(fn)));
}

bool is_circuit(const Matroid& m, const Subset& x) {
  require_universe(m, x);
  int size = static_cast<int>(x.count());
  if (size == 0 || m.rank(x) != size - 1) return false;
  bool minimal = true;
  x.for_each([&](std::size_t i) {
    if (minimal && m.rank(x.without(i)) != size - 1) minimal = false;
  });
  return minimal;
}

bool is_flat(const Matroid& m, const Subset& x) {
  require_universe(m, x);
  int r = m.rank(x);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!x.test(i) && m.rank(x.with(i)) == r) return false;
  }
  return true;
}

bool is_hyperplane(const Matroid& m, const Subset& x) {
  return m.rank(x) == m.full_rank() - 1 && is_flat(m, x);
}

bool is_circuit_hyperplane(const Matroid& m, const Subset& x) {
  return is_circuit(m, x) && is_hyperplane(m, x);
}

std::vector<Subset> circuits(const Matroid& m,
                             std::optional<std::size_t> max_size) {
  std::size_t limit = m.size();
  if (max_size) limit = std::min(limit, *max_size);
  // A circuit has at most r(E) + 1 elements.
  limit = std::min<std::size_t>(limit, static_cast<std::size_t>(m.full_rank()) + 1);
  std::vector<Subset> out;
  for (std::size_t k = 1; k <= limit; ++k) {
    for_each_k_subset(m.size(), k, [&](const Subset& s) {
      if (is_circuit(m, s)) out.push_back(s);
      return true;
    });
  }
  return out;
}

}  // namespace mlogic
