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

#include "mlogic/kinser.h"

#include <algorithm>
#include <string>

#include "mlogic/errors.h"
#include "mlogic/operations.h"

namespace mlogic {
namespace {

void require_r(int r) {
  if (r < 4) {
    throw ValidationError("Kin(r) needs r >= 4, got r = " + std::to_string(r));
  }
}

std::vector<Subset> kinser_blocks(int r, std::size_t n) {
  std::vector<Subset> blocks;
  std::size_t next = 0;
  for (int i = 1; i < r; ++i) {
    Subset h(n);
    for (int j = 0; j < r - 2; ++j) h.set(next++);
    blocks.push_back(h);
  }
  blocks.push_back(Subset::from_indices(n, {next, next + 1}));
  return blocks;
}

}  // namespace

const Subset& KinserDescriptor::block(int i) const {
  if (i < 1 || i > r) {
    throw DomainError("block index " + std::to_string(i) + " outside 1.." +
                      std::to_string(r));
  }
  return blocks[i - 1];
}

Subset KinserDescriptor::pair(int s) const { return block(s) | block(r); }

SetSystem kinser_set_system(int r) {
  require_r(r);
  std::vector<std::string> names;
  for (int i = 1; i < r; ++i) {
    for (int j = 1; j <= r - 2; ++j) {
      names.push_back("h" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  names.push_back("e");
  names.push_back("f");
  auto ground = std::make_shared<const GroundSet>(std::move(names));
  const std::size_t n = ground->size();
  auto blocks = kinser_blocks(r, n);

  Subset inner(n);  // H_1 ∪ ... ∪ H_{r-1}
  for (int i = 0; i < r - 1; ++i) inner |= blocks[i];
  std::vector<SetSystem::Family> families;
  for (int i = 1; i < r; ++i) {
    int prev = i == 1 ? r - 1 : i - 1;
    families.push_back({"A" + std::to_string(i),
                        inner - blocks[prev - 1] - blocks[i - 1]});
  }
  families.push_back({"A", Subset::full(n)});
  families.push_back({"A'", blocks[r - 1]});
  return SetSystem(ground, std::move(families));
}

KinserMatroid kinser_matroid(int r, std::vector<int> relaxed) {
  require_r(r);
  std::sort(relaxed.begin(), relaxed.end());
  for (std::size_t i = 0; i < relaxed.size(); ++i) {
    if (relaxed[i] < 1 || relaxed[i] >= r) {
      throw ValidationError("relax index " + std::to_string(relaxed[i]) +
                            " outside 1.." + std::to_string(r - 1));
    }
    if (i > 0 && relaxed[i] == relaxed[i - 1]) {
      throw ValidationError("relax index " + std::to_string(relaxed[i]) +
                            " repeated");
    }
  }
  SetSystem system = kinser_set_system(r);
  Matroid m_r1 = transversal_matroid(system);
  KinserDescriptor d{r, kinser_blocks(r, system.ground().size()), relaxed};
  Matroid m = truncate(m_r1);
  for (int s : relaxed) m = relax(m, d.pair(s));
  return {m.memoized(), std::move(d), std::move(system), std::move(m_r1)};
}

KinserMatroid kinser_double_relaxation(int r, int i) {
  require_r(r);
  if (i < 2 || i >= r) {
    throw ValidationError("double relaxation index " + std::to_string(i) +
                          " outside 2.." + std::to_string(r - 1));
  }
  return kinser_matroid(r, {1, i});
}

std::pair<int, int> kinser_lhs_rhs(const Matroid& m,
                                   const KinserAssignment& a) {
  const std::size_t n = a.sets.size();
  if (n < 4) {
    throw DomainError("the Kinser inequality needs n >= 4 sets, got " +
                      std::to_string(n));
  }
  auto x = [&](std::size_t i) -> const Subset& { return a.sets[i - 1]; };
  auto r = [&](const Subset& s) { return m.rank(s); };
  int lhs = r(x(1) | x(2)) + r(x(1) | x(3) | x(n)) + r(x(3));
  int rhs = r(x(1) | x(3)) + r(x(1) | x(n)) + r(x(2) | x(3));
  for (std::size_t i = 4; i <= n; ++i) {
    lhs += r(x(i)) + r(x(2) | x(i - 1) | x(i));
    rhs += r(x(2) | x(i)) + r(x(i - 1) | x(i));
  }
  return {lhs, rhs};
}

KinserAssignment kinser_witness(const KinserDescriptor& d, int s) {
  if (s < 1 || s >= d.r) {
    throw DomainError("witness index " + std::to_string(s) + " outside 1.." +
                      std::to_string(d.r - 1));
  }
  auto shifted = [&](int j) { return d.block((j + s - 2) % (d.r - 1) + 1); };
  KinserAssignment a;
  a.sets.push_back(shifted(1));
  a.sets.push_back(d.block(d.r));
  for (int j = 2; j < d.r; ++j) a.sets.push_back(shifted(j));
  return a;
}

std::pair<int, int> ingleton_check(const Matroid& m, const Subset& x1,
                                   const Subset& x2, const Subset& x3,
                                   const Subset& x4) {
  return kinser_lhs_rhs(m, KinserAssignment{{x1, x2, x3, x4}});
}

}  // namespace mlogic
