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

// Transversal matroids: the rank of X is the size of a maximum matching
// between X and an indexed family of subsets.

#ifndef MLOGIC_TRANSVERSAL_H_
#define MLOGIC_TRANSVERSAL_H_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlogic/matroid.h"

namespace mlogic {

class SetSystem {
 public:
  struct Family {
    std::string name;
    Subset members;
  };

  // Throws ValidationError on duplicate family names or families over a
  // different universe.
  SetSystem(std::shared_ptr<const GroundSet> ground,
            std::vector<Family> families);

  const GroundSet& ground() const { return *ground_; }
  const std::shared_ptr<const GroundSet>& ground_ptr() const { return ground_; }
  std::size_t size() const { return families_.size(); }
  const Family& family(std::size_t i) const { return families_[i]; }
  const std::vector<Family>& families() const { return families_; }
  std::optional<std::size_t> find(const std::string& name) const;

  // Indices of the families meeting x, in declaration order.
  std::vector<std::size_t> neighborhood(const Subset& x) const;
  std::vector<std::string> neighborhood_names(const Subset& x) const;

 private:
  std::shared_ptr<const GroundSet> ground_;
  std::vector<Family> families_;
};

class TransversalOracle : public RankOracle {
 public:
  explicit TransversalOracle(SetSystem system);
  std::size_t ground_size() const override { return system_.ground().size(); }
  int rank(const Subset& x) const override;
  const SetSystem& system() const { return system_; }

 private:
  SetSystem system_;
  // element -> families containing it
  std::vector<std::vector<std::size_t>> incident_;
  // A maximum matching of the whole ground set; each query starts from its
  // restriction to X and augments from the unmatched families.
  std::vector<std::size_t> global_match_;  // family -> element or npos
};

// Memoized transversal matroid of the system.
Matroid transversal_matroid(const SetSystem& s);

}  // namespace mlogic

#endif  // MLOGIC_TRANSVERSAL_H_
