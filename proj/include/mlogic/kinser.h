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

// The Kinser matroids Kin(r) and their circuit-hyperplane relaxations.
//
// The ground set is split into blocks H_1, ..., H_{r-1} of size r - 2 and
// H_r = {e, f}. M_{r+1} is the transversal matroid of the system
//
//   A_i = (H_1 ∪ ... ∪ H_{r-1}) - (H_{i-1} ∪ H_i),  i = 1..r-1, H_0 = H_{r-1}
//   A   = E
//   A'  = H_r
//
// and Kin(r) is its truncation to rank r. Each H_s ∪ H_r is a
// circuit-hyperplane of Kin(r).

#ifndef MLOGIC_KINSER_H_
#define MLOGIC_KINSER_H_

#include <utility>
#include <vector>

#include "mlogic/matroid.h"
#include "mlogic/transversal.h"

namespace mlogic {

struct KinserDescriptor {
  int r = 0;
  // blocks[i - 1] is H_i, for i = 1..r.
  std::vector<Subset> blocks;
  // Ascending indices s with H_s ∪ H_r relaxed.
  std::vector<int> relaxed;

  // 1-based; throws DomainError outside 1..r.
  const Subset& block(int i) const;
  // H_s ∪ H_r.
  Subset pair(int s) const;
};

struct KinserAssignment {
  std::vector<Subset> sets;  // X_1, ..., X_n
};

struct KinserMatroid {
  Matroid matroid;  // Kin(r) with the requested relaxations
  KinserDescriptor descriptor;
  SetSystem system;     // presentation of M_{r+1}
  Matroid transversal;  // M_{r+1}
};

inline int kinser_element_count(int r) { return r * r - 3 * r + 4; }

// Ground set h1_1 ... h{r-1}_{r-2} e f and the system A_1..A_{r-1}, A, A'.
// Throws ValidationError for r < 4.
SetSystem kinser_set_system(int r);

// Relaxation indices must be distinct and in 1..r-1 (ValidationError).
// They are applied after truncation in ascending order.
KinserMatroid kinser_matroid(int r, std::vector<int> relaxed = {});

// Kin(r) with H_1 ∪ H_r and H_i ∪ H_r relaxed, for 2 <= i <= r - 1
// (ValidationError otherwise).
KinserMatroid kinser_double_relaxation(int r, int i);

// Evaluates both sides of the Kinser inequality
//
//   r(X1∪X2) + r(X1∪X3∪Xn) + r(X3) + Σ_{i=4..n} (r(Xi) + r(X2∪X{i-1}∪Xi))
//     <= r(X1∪X3) + r(X1∪Xn) + r(X2∪X3) + Σ_{i=4..n} (r(X2∪Xi) + r(X{i-1}∪Xi))
//
// which holds in every representable matroid. Throws DomainError for n < 4.
std::pair<int, int> kinser_lhs_rhs(const Matroid& m, const KinserAssignment& a);

// (H'_1, H_r, H'_2, ..., H'_{r-1}) with H'_j = H_{((j + s - 2) mod (r-1)) + 1},
// so that H_s plays the part of H_1. Throws DomainError unless 1 <= s < r.
KinserAssignment kinser_witness(const KinserDescriptor& d, int s);

// The n = 4 case, which is Ingleton's inequality.
std::pair<int, int> ingleton_check(const Matroid& m, const Subset& x1,
                                   const Subset& x2, const Subset& x3,
                                   const Subset& x4);

}  // namespace mlogic

#endif  // MLOGIC_KINSER_H_
