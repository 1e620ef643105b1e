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

#include "mlogic/definability.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

#include "mlogic/errors.h"
#include "mlogic/msol/parser.h"
#include "mlogic/operations.h"

namespace mlogic {

using msol::Formula;
using msol::Interpretation;
using msol::Term;
using msol::Var;

namespace {

MintermBasis build_basis(std::vector<Var> vars, std::vector<Subset> gens,
                         std::size_t n) {
  MintermBasis b;
  b.universe = n;
  b.variables = std::move(vars);
  b.generators = std::move(gens);
  std::map<std::uint32_t, Subset> by_pattern;
  for (std::size_t e = 0; e < n; ++e) {
    std::uint32_t pattern = 0;
    for (std::size_t k = 0; k < b.generators.size(); ++k) {
      if (b.generators[k].test(e)) pattern |= std::uint32_t{1} << k;
    }
    auto [it, fresh] = by_pattern.try_emplace(pattern, n);
    it->second.set(e);
  }
  for (auto& [pattern, m] : by_pattern) b.minterms.push_back(std::move(m));
  return b;
}

// Basis from the set variables of i only.
MintermBasis set_basis(const Interpretation& i, std::size_t n) {
  std::vector<Var> vars;
  std::vector<Subset> gens;
  for (const auto& [k, s] : i.sets()) {
    vars.push_back(Var::set(k));
    gens.push_back(s);
  }
  return build_basis(std::move(vars), std::move(gens), n);
}

Subset image(const Interpretation& i, std::size_t n) {
  Subset t(n);
  for (const auto& [k, e] : i.elements()) t.set(e);
  return t;
}

void collect_set_terms(const Term& t, std::vector<msol::TermPtr>& out,
                       const msol::TermPtr& self) {
  if (t.sort() == msol::Sort::kSet) out.push_back(self);
  for (const auto& c : t.children()) collect_set_terms(*c, out, c);
}

void collect_set_terms(const Formula& f, std::vector<msol::TermPtr>& out) {
  if (f.is_atomic()) {
    collect_set_terms(*f.lhs(), out, f.lhs());
    collect_set_terms(*f.rhs(), out, f.rhs());
    return;
  }
  for (const auto& c : f.children()) collect_set_terms(*c, out);
}

}  // namespace

bool MintermBasis::is_definable(const Subset& s) const {
  return std::all_of(minterms.begin(), minterms.end(), [&](const Subset& m) {
    return m.is_subset_of(s) || !m.intersects(s);
  });
}

std::size_t MintermBasis::family_size() const {
  if (minterms.size() >= std::numeric_limits<std::size_t>::digits) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::size_t{1} << minterms.size();
}

MintermBasis minterm_basis(const Interpretation& i, std::size_t n) {
  const std::size_t vars = i.sets().size() + i.elements().size();
  if (vars > kMaxDefinabilityVariables) {
    throw ResourceError("definability is limited to " +
                        std::to_string(kMaxDefinabilityVariables) +
                        " variables, got " + std::to_string(vars));
  }
  std::vector<Var> order;
  std::vector<Subset> gens;
  for (const auto& [k, s] : i.sets()) {
    if (s.universe_size() != n) {
      throw DomainError("X" + std::to_string(k) +
                        " is assigned a subset of a different ground set");
    }
    order.push_back(Var::set(k));
    gens.push_back(s);
  }
  for (const auto& [k, e] : i.elements()) {
    if (e >= n) throw DomainError("x" + std::to_string(k) + " is assigned a non-element");
    order.push_back(Var::element(k));
    gens.push_back(Subset::from_indices(n, {e}));
  }
  return build_basis(std::move(order), std::move(gens), n);
}

bool DefinableFamily::contains(const Subset& s) const {
  return std::binary_search(sets.begin(), sets.end(), s);
}

DefinableFamily definable_family(const Interpretation& i, std::size_t n) {
  DefinableFamily f{minterm_basis(i, n), {}};
  const std::size_t k = f.basis.minterms.size();
  if (k > kMaxEnumeratedMinterms) {
    throw ResourceError("refusing to list 2^" + std::to_string(k) +
                        " definable sets");
  }
  // Gray code: each step toggles one minterm into or out of the union.
  f.sets.reserve(std::size_t{1} << k);
  Subset cur(n);
  f.sets.push_back(cur);
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); ++g) {
    cur ^= f.basis.minterms[static_cast<std::size_t>(__builtin_ctzll(g))];
    f.sets.push_back(cur);
  }
  std::sort(f.sets.begin(), f.sets.end());
  return f;
}

std::optional<std::pair<Subset, Subset>> symdif_decompose(
    const Subset& s, const Interpretation& i, std::size_t n) {
  if (!minterm_basis(i, n).is_definable(s)) return std::nullopt;
  const Subset t = image(i, n);
  Subset a(n);
  for (const Subset& m : set_basis(i, n).minterms) {
    if ((m - t).is_subset_of(s)) a |= m;
  }
  Subset b = s & t;
  if (((a - t) | b) != s) {
    throw Error("internal: decomposition does not reconstruct the set");
  }
  return std::make_pair(std::move(a), std::move(b));
}

std::string HkDisjointnessReport::summary() const {
  std::ostringstream out;
  out << "r=" << r << " n=" << n_budget << " symdiff=" << symmetric_difference
      << " bound=" << bound << " margin=" << margin << " "
      << (conclusive ? "disjoint" : "inconclusive");
  return out.str();
}

HkDisjointnessReport hk_family_disjointness(const KinserDescriptor& d,
                                            int n_budget) {
  if (n_budget < 0) throw DomainError("n must be nonnegative");
  HkDisjointnessReport rep;
  rep.r = d.r;
  rep.n_budget = n_budget;
  rep.symmetric_difference = std::numeric_limits<std::size_t>::max();
  for (int k1 = 1; k1 < d.r; ++k1) {
    for (int k2 = k1 + 1; k2 < d.r; ++k2) {
      rep.symmetric_difference = std::min(rep.symmetric_difference,
                                          (d.pair(k1) ^ d.pair(k2)).count());
    }
  }
  rep.bound = 4 * static_cast<std::size_t>(n_budget);
  rep.conclusive = rep.symmetric_difference > rep.bound;
  rep.margin = static_cast<long long>(rep.symmetric_difference) -
               static_cast<long long>(rep.bound);
  return rep;
}

NondefinableChoice find_nondefinable_ch(const KinserDescriptor& d,
                                        const Interpretation& i,
                                        int exclude_index) {
  const std::size_t n = d.blocks.empty() ? 0 : d.blocks[0].universe_size();
  MintermBasis basis = minterm_basis(i, n);
  NondefinableChoice c;
  c.family_size = basis.family_size();
  for (int s = 1; s < d.r; ++s) {
    if (s != exclude_index) ++c.candidates;
  }
  c.guaranteed = c.candidates > c.family_size;
  for (int s = 1; s < d.r; ++s) {
    if (s == exclude_index) continue;
    if (!basis.is_definable(d.pair(s))) {
      c.s = s;
      return c;
    }
  }
  throw DomainError("every one of the " + std::to_string(c.candidates) +
                    " candidate circuit-hyperplanes is definable (" +
                    std::to_string(c.family_size) + " definable sets)");
}

InvisibilityReport relaxation_invisibility_check(const KinserMatroid& kin,
                                                 const Interpretation& i,
                                                 const Formula& matrix,
                                                 std::optional<int> forced_s) {
  const KinserDescriptor& d = kin.descriptor;
  if (msol::count_quantifiers(matrix) != 0) {
    throw DomainError("the matrix must be quantifier-free");
  }
  const auto domain = i.domain();
  for (const Var& v : matrix.free()) {
    if (!domain.count(v)) {
      throw DomainError("interpretation does not assign " + v.name());
    }
  }
  const std::size_t n = kin.matroid.size();
  InvisibilityReport rep;
  rep.s = forced_s ? *forced_s : find_nondefinable_ch(d, i).s;
  if (rep.s < 1 || rep.s >= d.r) {
    throw DomainError("index " + std::to_string(rep.s) + " is not in 1.." +
                      std::to_string(d.r - 1));
  }
  if (std::find(d.relaxed.begin(), d.relaxed.end(), rep.s) != d.relaxed.end()) {
    throw DomainError("H_" + std::to_string(rep.s) + " is already relaxed");
  }
  const Subset ch = d.pair(rep.s);

  MintermBasis basis = minterm_basis(i, n);
  std::vector<msol::TermPtr> terms;
  collect_set_terms(matrix, terms);
  rep.all_terms_definable = true;
  for (const auto& t : terms) {
    std::string text = msol::to_text(*t);
    auto seen = std::find_if(rep.set_terms.begin(), rep.set_terms.end(),
                             [&](const auto& p) { return p.first == text; });
    if (seen != rep.set_terms.end()) continue;
    Subset value = msol::denote(*t, i, n);
    rep.all_terms_definable = rep.all_terms_definable && basis.is_definable(value);
    rep.circuit_hyperplane_denoted = rep.circuit_hyperplane_denoted || value == ch;
    rep.set_terms.emplace_back(std::move(text), std::move(value));
  }

  msol::EvalOptions o;
  o.allow_extra_assignments = true;
  rep.value_before = msol::evaluate(kin.matroid, matrix, i, o);
  rep.value_after = msol::evaluate(relax(kin.matroid, ch), matrix, i, o);
  return rep;
}

}  // namespace mlogic
