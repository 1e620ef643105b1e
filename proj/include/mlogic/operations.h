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

#ifndef MLOGIC_OPERATIONS_H_
#define MLOGIC_OPERATIONS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "mlogic/matroid.h"

namespace mlogic {

// Rank X -> min(r(X), r(E) - 1). Throws ValidationError on rank-0 input.
Matroid truncate(const Matroid& m);

// Raises r(c) by one. Unless `force` is set, c must be a circuit-hyperplane
// of m (ValidationError otherwise). Relaxing an already relaxed matroid
// layers another wrapper over the previous one.
Matroid relax(const Matroid& m, const Subset& c, bool force = false);

// Deletion keeps the remaining elements in declaration order.
Matroid delete_elements(const Matroid& m, const Subset& d);
Matroid restrict_to(const Matroid& m, const Subset& keep);
// Ground set E - c, rank X -> r(X ∪ c) - r(c).
Matroid contract(const Matroid& m, const Subset& c);

// Ground set E_a followed by E_b; names must not collide.
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Matroid on b's ground set whose rank of Y is r_a(perm^{-1}(Y)), where
// perm[i] is the image in b's ground set of a's element i.
Matroid relabel(const Matroid& a, const std::vector<std::size_t>& perm,
                std::shared_ptr<const GroundSet> target);

bool is_circuit(const Matroid& m, const Subset& x);
// No element outside x keeps the rank of x constant when added.
bool is_flat(const Matroid& m, const Subset& x);
bool is_hyperplane(const Matroid& m, const Subset& x);
bool is_circuit_hyperplane(const Matroid& m, const Subset& x);

// All circuits, optionally only those with at most max_size elements, in
// order of increasing size, then lexicographically by element indices.
// Enumerates subsets of
// the ground set, so it is meant for small matroids or small max_size.
std::vector<Subset> circuits(const Matroid& m,
                             std::optional<std::size_t> max_size = {});

// Calls f on every k-element subset of an n-element universe in
// lexicographic order of index tuples. Returning false from f stops early.
template <typename F>
void for_each_k_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s(n);
    for (std::size_t i : idx) s.set(i);
    if (!f(s)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace mlogic

#endif  // MLOGIC_OPERATIONS_H_
