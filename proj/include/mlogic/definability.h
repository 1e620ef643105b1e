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

// Sets definable from an interpretation, and the search for a Kinser
// circuit-hyperplane that no quantifier-free formula under it can see.
//
// A minterm of an interpretation is a nonempty intersection that picks, for
// each assigned variable, either its value or the complement (an element
// variable counts as the singleton of its value). Definable sets are the
// unions of minterms.

#ifndef MLOGIC_DEFINABILITY_H_
#define MLOGIC_DEFINABILITY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlogic/kinser.h"
#include "mlogic/msol/ast.h"
#include "mlogic/msol/evaluator.h"
#include "mlogic/subset.h"

namespace mlogic {

// Hard cap on assigned variables (set plus element).
inline constexpr std::size_t kMaxDefinabilityVariables = 5;
// definable_family refuses to list more than 2^20 sets.
inline constexpr std::size_t kMaxEnumeratedMinterms = 20;

struct MintermBasis {
  std::size_t universe = 0;
  // Value of each assigned variable, sets first, each sort by index.
  std::vector<msol::Var> variables;
  std::vector<Subset> generators;
  // Nonempty, pairwise disjoint, covering the ground set; ordered by the
  // membership pattern that defines them.
  std::vector<Subset> minterms;

  bool is_definable(const Subset& s) const;
  // 2^(number of minterms); saturates at SIZE_MAX.
  std::size_t family_size() const;
};

// Throws ResourceError above kMaxDefinabilityVariables variables and
// DomainError if an assignment does not fit an n-element ground set.
MintermBasis minterm_basis(const msol::Interpretation& i, std::size_t n);

struct DefinableFamily {
  MintermBasis basis;
  // Every union of minterms, once each (distinct because the minterms are
  // disjoint and nonempty), sorted.
  std::vector<Subset> sets;

  bool contains(const Subset& s) const;
};

// Throws ResourceError when the basis has more than kMaxEnumeratedMinterms
// minterms, in addition to the minterm_basis errors.
DefinableFamily definable_family(const msol::Interpretation& i, std::size_t n);

// Splits a set definable under i as (A - T) | B, where T is the set of
// element values, A is definable from the set variables alone and B is
// within T. Empty if s is not definable under i.
std::optional<std::pair<Subset, Subset>> symdif_decompose(
    const Subset& s, const msol::Interpretation& i, std::size_t n);

struct HkDisjointnessReport {
  int r = 0;
  int n_budget = 0;
  // Smallest |(H_k1 | H_r) ^ (H_k2 | H_r)| over k1 != k2, i.e. 2r - 4.
  std::size_t symmetric_difference = 0;
  std::size_t bound = 0;  // 4 * n_budget
  // The families {(H_k | H_r) ^ Z : |Z| <= 2 n_budget} are pairwise disjoint
  // when symmetric_difference > bound.
  bool conclusive = false;
  long long margin = 0;  // symmetric_difference - bound

  std::string summary() const;
};

HkDisjointnessReport hk_family_disjointness(const KinserDescriptor& d,
                                            int n_budget);

struct NondefinableChoice {
  int s = 0;                     // H_s | H_r is not definable
  std::size_t candidates = 0;    // indices searched
  std::size_t family_size = 0;   // 2^(minterms)
  bool guaranteed = false;       // candidates > family_size
};

// Smallest s in {1, ..., r-1}, skipping exclude_index if nonzero, such that
// the circuit-hyperplane H_s | H_r is not definable under i. When there are
// more candidates than definable sets such an s must exist; otherwise the
// candidates are searched directly. Throws DomainError if every candidate
// is definable, stating both counts.
NondefinableChoice find_nondefinable_ch(const KinserDescriptor& d,
                                        const msol::Interpretation& i,
                                        int exclude_index = 0);

struct InvisibilityReport {
  int s = 0;
  // Each set term of the matrix with its value under i.
  std::vector<std::pair<std::string, Subset>> set_terms;
  bool all_terms_definable = false;
  bool circuit_hyperplane_denoted = false;
  bool value_before = false;  // matrix on Kin(r) as given
  bool value_after = false;   // matrix after also relaxing H_s | H_r
  bool identical() const { return value_before == value_after; }
};

// Evaluates a quantifier-free matrix under i on kin and on kin with
// H_s | H_r relaxed. s defaults to find_nondefinable_ch. Throws
// DomainError if the matrix has quantifiers or a free variable that i does
// not assign, or if s is already relaxed.
InvisibilityReport relaxation_invisibility_check(
    const KinserMatroid& kin, const msol::Interpretation& i,
    const msol::Formula& matrix, std::optional<int> forced_s = std::nullopt);

}  // namespace mlogic

#endif  // MLOGIC_DEFINABILITY_H_
