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

#include "mlogic/validate.h"

#include <bit>
#include <random>

#include "mlogic/errors.h"
#include "mlogic/explicit.h"

namespace mlogic {
namespace {

std::string fmt_mask(const GroundSet& g, std::uint64_t mask) {
  return g.format(Subset::from_mask(g.size(), mask));
}

ValidationReport check_table(const GroundSet& g,
                             const std::vector<std::uint8_t>& t) {
  ValidationReport rep;
  rep.exhaustive = true;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violation = std::move(msg);
    return rep;
  };
  const std::size_t n = g.size();
  if (t[0] != 0) return fail("R1 fails: r({}) = " + std::to_string(t[0]));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    int rx = t[x];
    for (std::size_t e = 0; e < n; ++e) {
      std::uint64_t be = std::uint64_t{1} << e;
      if (x & be) continue;
      int rxe = t[x | be];
      if (rxe < rx) {
        return fail("R2 fails: X1 = " + fmt_mask(g, x) + ", X2 = " +
                    fmt_mask(g, x | be) + " (r = " + std::to_string(rx) +
                    " > " + std::to_string(rxe) + ")");
      }
      if (rxe > rx + 1) {
        if (t[be] > 1) {
          return fail("R1 fails: X1 = " + fmt_mask(g, be) + " has rank " +
                      std::to_string(t[be]));
        }
        return fail("R3 fails: X1 = " + fmt_mask(g, x) + ", X2 = " +
                    fmt_mask(g, be));
      }
      for (std::size_t f = e + 1; f < n; ++f) {
        std::uint64_t bf = std::uint64_t{1} << f;
        if (x & bf) continue;
        if (t[x | be] + t[x | bf] < t[x | be | bf] + rx) {
          return fail("R3 fails: X1 = " + fmt_mask(g, x | be) + ", X2 = " +
                      fmt_mask(g, x | bf));
        }
      }
    }
  }
  return rep;
}

ValidationReport check_sampled(const Matroid& m,
                               const ValidationOptions& options) {
  ValidationReport rep;
  const GroundSet& g = m.ground();
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violation = std::move(msg);
    return rep;
  };
  if (int r0 = m.rank(g.none()); r0 != 0) {
    return fail("R1 fails: r({}) = " + std::to_string(r0));
  }
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  auto random_subset = [&]() {
    Subset s(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (coin(rng)) s.set(i);
    }
    return s;
  };
  for (std::size_t k = 0; k < options.samples; ++k) {
    Subset x = random_subset();
    Subset y = random_subset();
    int rx = m.rank(x);
    int ry = m.rank(y);
    for (const auto* s : {&x, &y}) {
      int rs = s == &x ? rx : ry;
      if (rs < 0 || rs > static_cast<int>(s->count())) {
        return fail("R1 fails: X1 = " + g.format(*s));
      }
    }
    Subset meet = x & y;
    Subset join = x | y;
    int rmeet = m.rank(meet);
    int rjoin = m.rank(join);
    if (rmeet > rx) {
      return fail("R2 fails: X1 = " + g.format(meet) + ", X2 = " + g.format(x));
    }
    if (rjoin + rmeet > rx + ry) {
      return fail("R3 fails: X1 = " + g.format(x) + ", X2 = " + g.format(y));
    }
  }
  return rep;
}

}  // namespace

ValidationReport check_rank_axioms(const Matroid& m,
                                   const ValidationOptions& options) {
  bool exhaustive =
      options.strict || m.size() <= options.exhaustive_limit;
  if (!exhaustive) return check_sampled(m, options);
  if (m.size() > kMaxMaterializedElements) {
    throw ResourceError("exhaustive validation refused for " +
                        std::to_string(m.size()) + " elements (limit " +
                        std::to_string(kMaxMaterializedElements) + ")");
  }
  return check_table(m.ground(), rank_table(m));
}

void validate_matroid(const Matroid& m, const ValidationOptions& options) {
  auto rep = check_rank_axioms(m, options);
  if (!rep.ok) throw ValidationError("not a matroid: " + rep.violation);
}

// --- explicit matroids -------------------------------------------------------

std::vector<std::uint8_t> rank_table(const Matroid& m) {
  if (m.size() > kMaxMaterializedElements) {
    throw ResourceError("cannot materialize a rank table for " +
                        std::to_string(m.size()) + " elements (limit " +
                        std::to_string(kMaxMaterializedElements) + ")");
  }
  const std::uint64_t total = std::uint64_t{1} << m.size();
  std::vector<std::uint8_t> table(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    table[x] = static_cast<std::uint8_t>(
        m.oracle()->rank(Subset::from_mask(m.size(), x)));
  }
  return table;
}

}  // namespace mlogic
