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

#include "mlogic/transversal.h"

#include <limits>
#include <unordered_set>

#include "mlogic/errors.h"
#include "mlogic/oracles.h"

namespace mlogic {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Kuhn's augmenting-path matching, families on the left. match_family[j]
// is the element matched to family j; match_elem is the inverse.
class Matcher {
 public:
  Matcher(const SetSystem& s, const Subset& allowed,
          std::vector<std::size_t>& match_family,
          std::vector<std::size_t>& match_elem)
      : s_(s),
        allowed_(allowed),
        match_family_(match_family),
        match_elem_(match_elem),
        seen_(allowed.universe_size()) {}

  // Tries to match family j, rerouting earlier matches if needed.
  bool augment_from(std::size_t j) {
    seen_ = Subset(allowed_.universe_size());
    return dfs(j);
  }

 private:
  bool dfs(std::size_t j) {
    Subset cand = s_.family(j).members & allowed_;
    cand -= seen_;
    for (std::size_t x = cand.first(); x < cand.universe_size();
         x = cand.next(x)) {
      if (seen_.test(x)) continue;
      seen_.set(x);
      if (match_elem_[x] == kNone || dfs(match_elem_[x])) {
        match_elem_[x] = j;
        match_family_[j] = x;
        return true;
      }
    }
    return false;
  }

  const SetSystem& s_;
  const Subset& allowed_;
  std::vector<std::size_t>& match_family_;
  std::vector<std::size_t>& match_elem_;
  Subset seen_;
};

}  // namespace

SetSystem::SetSystem(std::shared_ptr<const GroundSet> ground,
                     std::vector<Family> families)
    : ground_(std::move(ground)), families_(std::move(families)) {
  std::unordered_set<std::string> names;
  for (const auto& f : families_) {
    if (f.name.empty()) throw ValidationError("family name must be nonempty");
    if (!names.insert(f.name).second) {
      throw ValidationError("duplicate family name '" + f.name + "'");
    }
    if (f.members.universe_size() != ground_->size()) {
      throw ValidationError("family '" + f.name +
                            "' is not a subset of the ground set");
    }
  }
}

std::optional<std::size_t> SetSystem::find(const std::string& name) const {
  for (std::size_t i = 0; i < families_.size(); ++i) {
    if (families_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> SetSystem::neighborhood(const Subset& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < families_.size(); ++i) {
    if (families_[i].members.intersects(x)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> SetSystem::neighborhood_names(const Subset& x) const {
  std::vector<std::string> out;
  for (std::size_t i : neighborhood(x)) out.push_back(families_[i].name);
  return out;
}

TransversalOracle::TransversalOracle(SetSystem system)
    : system_(std::move(system)) {
  const std::size_t n = system_.ground().size();
  std::vector<std::size_t> match_elem(n, kNone);
  global_match_.assign(system_.size(), kNone);
  Subset all = Subset::full(n);
  Matcher m(system_, all, global_match_, match_elem);
  for (std::size_t j = 0; j < system_.size(); ++j) m.augment_from(j);
}

int TransversalOracle::rank(const Subset& x) const {
  std::vector<std::size_t> match_family(system_.size(), kNone);
  std::vector<std::size_t> match_elem(x.universe_size(), kNone);
  int size = 0;
  for (std::size_t j = 0; j < system_.size(); ++j) {
    std::size_t e = global_match_[j];
    if (e != kNone && x.test(e)) {
      match_family[j] = e;
      match_elem[e] = j;
      ++size;
    }
  }
  const int cap = static_cast<int>(std::min(x.count(), system_.size()));
  Matcher m(system_, x, match_family, match_elem);
  for (std::size_t j = 0; j < system_.size() && size < cap; ++j) {
    if (match_family[j] == kNone && m.augment_from(j)) ++size;
  }
  return size;
}

Matroid transversal_matroid(const SetSystem& s) {
  return Matroid(s.ground_ptr(), std::make_shared<TransversalOracle>(s))
      .memoized();
}

}  // namespace mlogic
