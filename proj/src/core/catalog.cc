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

#include "mlogic/catalog.h"

#include <algorithm>

#include "mlogic/errors.h"
#include "mlogic/operations.h"
#include "mlogic/oracles.h"

namespace mlogic {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                            : "e" + std::to_string(i));
  }
  return names;
}

Matroid uniform_matroid(int k, int n) {
  if (n < 0 || k < 0 || k > n) {
    throw ValidationError("U_{" + std::to_string(k) + "," + std::to_string(n) +
                          "} needs 0 <= k <= n");
  }
  auto ground = std::make_shared<const GroundSet>(default_names(n));
  auto oracle = std::make_shared<FunctionOracle>(
      n, [k](const Subset& x) {
        return std::min(k, static_cast<int>(x.count()));
      });
  return Matroid(ground, oracle);
}

Matroid matroid_from_bases(std::vector<std::string> names,
                           const std::vector<std::vector<std::string>>& bases) {
  auto ground = std::make_shared<const GroundSet>(std::move(names));
  std::vector<Subset> sets;
  sets.reserve(bases.size());
  for (const auto& b : bases) sets.push_back(ground->subset(b));
  return Matroid(ground,
                 std::make_shared<BasesOracle>(ground->size(), std::move(sets)));
}

Matroid vamos_matroid() {
  const std::vector<std::string> names = {"a", "b", "c", "d",
                                          "e", "f", "g", "h"};
  const std::vector<std::vector<std::string>> planes = {
      {"a", "b", "c", "d"}, {"a", "b", "e", "f"}, {"a", "b", "g", "h"},
      {"c", "d", "e", "f"}, {"c", "d", "g", "h"}};
  GroundSet g(names);
  std::vector<Subset> plane_sets;
  for (const auto& p : planes) plane_sets.push_back(g.subset(p));
  std::vector<std::vector<std::string>> bases;
  for_each_k_subset(8, 4, [&](const Subset& s) {
    if (std::find(plane_sets.begin(), plane_sets.end(), s) == plane_sets.end()) {
      std::vector<std::string> b;
      s.for_each([&](std::size_t i) { b.push_back(names[i]); });
      bases.push_back(std::move(b));
    }
    return true;
  });
  return matroid_from_bases(names, bases);
}

}  // namespace mlogic
