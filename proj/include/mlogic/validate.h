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

#ifndef MLOGIC_VALIDATE_H_
#define MLOGIC_VALIDATE_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "mlogic/matroid.h"

namespace mlogic {

struct ValidationOptions {
  // Exhaustive up to this many elements, random sampling above.
  std::size_t exhaustive_limit = 12;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  // Always exhaustive; refuses (ResourceError) structures too large to
  // materialize.
  bool strict = false;
};

struct ValidationReport {
  bool ok = true;
  bool exhaustive = false;
  // Empty when ok. Otherwise names the axiom (R1, R2, R3) and the sets.
  std::string violation;
};

// Checks R1-R3. The exhaustive mode uses the equivalent local form
// r(∅) = 0, r(X) <= r(X+e) <= r(X) + 1 and
// r(X+e) + r(X+f) >= r(X+e+f) + r(X), which is O(n^2 2^n) instead of O(4^n).
ValidationReport check_rank_axioms(const Matroid& m,
                                   const ValidationOptions& options = {});

// Throws ValidationError carrying the violation.
void validate_matroid(const Matroid& m, const ValidationOptions& options = {});

}  // namespace mlogic

#endif  // MLOGIC_VALIDATE_H_
