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

// Small named matroids used throughout tests and examples.

#ifndef MLOGIC_CATALOG_H_
#define MLOGIC_CATALOG_H_

#include <cstddef>
#include <string>
#include <vector>

#include "mlogic/matroid.h"

namespace mlogic {

// "a", "b", ... for n <= 26, otherwise "e0", "e1", ...
std::vector<std::string> default_names(std::size_t n);

Matroid uniform_matroid(int k, int n);
inline Matroid free_matroid(int n) { return uniform_matroid(n, n); }

// Rank from a basis list: r(X) = max |X ∩ B|. Not validated here.
Matroid matroid_from_bases(std::vector<std::string> names,
                           const std::vector<std::vector<std::string>>& bases);

// Rank-4 Vámos matroid on a..h. Its non-spanning circuits are the five
// 4-sets {a,b,c,d}, {a,b,e,f}, {a,b,g,h}, {c,d,e,f}, {c,d,g,h}; {e,f,g,h}
// is a basis.
Matroid vamos_matroid();

}  // namespace mlogic

#endif  // MLOGIC_CATALOG_H_
