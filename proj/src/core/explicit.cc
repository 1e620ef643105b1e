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

#include "mlogic/explicit.h"

#include "mlogic/errors.h"
#include "mlogic/oracles.h"
#include "mlogic/validate.h"

namespace mlogic {

ExplicitMatroid::ExplicitMatroid(std::shared_ptr<const GroundSet> ground,
                                 std::vector<std::uint8_t> table, Check check)
    : ground_(std::move(ground)),
      oracle_(std::make_shared<TableOracle>(ground_->size(), std::move(table))),
      matroid_(ground_, oracle_) {
  if (check == Check::kValidate) {
    ValidationOptions opts;
    opts.strict = true;
    validate_matroid(matroid_, opts);
  }
}

ExplicitMatroid ExplicitMatroid::materialize(const Matroid& m) {
  return ExplicitMatroid(m.ground_ptr(), rank_table(m), Check::kSkip);
}

}  // namespace mlogic
