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

#ifndef MLOGIC_ISOMORPHISM_H_
#define MLOGIC_ISOMORPHISM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mlogic/matroid.h"

namespace mlogic {

// perm[i] is the index in the second ground set of the first's element i.
using Bijection = std::vector<std::size_t>;

// Rank-preserving bijection search on two rank tables over the same number
// of elements. Elements of `a` are ordered by how few candidates share their
// invariant signature (per-element circuit counts by size), ties by
// declaration order; candidates in `b` are tried in declaration order and
// each partial map is checked on every subset of the mapped elements. The
// first bijection found is returned.
std::optional<Bijection> find_isomorphism(const std::vector<std::uint8_t>& a,
                                          const std::vector<std::uint8_t>& b,
                                          std::size_t n);

// Materializes both matroids (ResourceError above 24 elements).
std::optional<Bijection> is_isomorphic(const Matroid& a, const Matroid& b);

struct MinorWitness {
  Subset contracted;  // independent in the host
  Subset kept;        // |kept| = |E(N)|, disjoint from contracted
  // map[i] = host element playing N's element i.
  std::vector<std::size_t> map;
};

// Exhaustive search over independent contraction sets C and |E(N)|-subsets
// T of E - C for (M / C) | T isomorphic to N. Candidates are pruned by the
// rank of T in M / C and by the number of loops before the isomorphism
// search runs.
std::optional<MinorWitness> find_minor(const Matroid& m, const Matroid& n);
inline bool has_minor(const Matroid& m, const Matroid& n) {
  return find_minor(m, n).has_value();
}

}  // namespace mlogic

#endif  // MLOGIC_ISOMORPHISM_H_
