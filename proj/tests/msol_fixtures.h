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

// Random formulas and a deliberately plain reference evaluator.

#ifndef MLOGIC_TESTS_MSOL_FIXTURES_H_
#define MLOGIC_TESTS_MSOL_FIXTURES_H_

#include <functional>
#include <map>
#include <random>

#include "mlogic/matroid.h"
#include "mlogic/msol/ast.h"
#include "mlogic/msol/evaluator.h"
#include "mlogic/msol/transform.h"

namespace mlogic::msol {

class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  // Well-formed formula over X1, X2 and x1, x2 with at most `depth` levels
  // of connectives and quantifiers.
  FormulaPtr formula(int depth) {
    FormulaPtr f = raw(depth);
    if (rule5_violation(*f)) f = rename_bound_conflicts(f);
    return f;
  }

  // Same, closed by universally or existentially binding each free variable.
  FormulaPtr sentence(int depth) {
    FormulaPtr f = formula(depth);
    for (const Var& v : VarSet(f->free())) {
      f = pick(2) ? Formula::exists(v, f) : Formula::forall(v, f);
    }
    return f;
  }

 private:
  int pick(int n) { return static_cast<int>(rng_() % static_cast<unsigned>(n)); }
  Var set_var() { return Var::set(1 + pick(2)); }
  Var elem_var() { return Var::element(1 + pick(2)); }

  TermPtr set_term(int depth) {
    int k = depth <= 0 ? pick(4) : pick(7);
    switch (k) {
      case 0:
      case 1:
        return Term::var(set_var());
      case 2:
        return pick(2) ? Term::ground() : Term::empty();
      case 3:
        return Term::singleton(Term::var(elem_var()));
      case 4:
        return Term::complement(set_term(depth - 1));
      case 5:
        return Term::union_of(set_term(depth - 1), set_term(depth - 1));
      default:
        return Term::intersection(set_term(depth - 1), set_term(depth - 1));
    }
  }

  TermPtr int_term(int depth) {
    int k = depth <= 0 ? pick(3) : pick(4);
    switch (k) {
      case 0:
        return Term::constant(pick(4));
      case 1:
        return Term::cardinality(set_term(1));
      case 2:
        return Term::rank(set_term(1));
      default:
        return Term::sum(int_term(depth - 1), int_term(depth - 1));
    }
  }

  FormulaPtr atom() {
    switch (pick(6)) {
      case 0:
        return Formula::equals(Term::var(elem_var()), Term::var(elem_var()));
      case 1:
        return Formula::equals(Term::var(set_var()), set_term(1));
      case 2:
        return Formula::subseteq(set_term(1), set_term(1));
      case 3:
        return Formula::equals(int_term(1), int_term(1));
      case 4:
        return Formula::less_equal(int_term(1), int_term(1));
      default:
        return Formula::member(Term::var(elem_var()), set_term(1));
    }
  }

  FormulaPtr raw(int depth) {
    if (depth <= 0) return atom();
    switch (pick(5)) {
      case 0:
        return atom();
      case 1:
        return Formula::negation(raw(depth - 1));
      case 2:
        return Formula::conjunction(raw(depth - 1), raw(depth - 1));
      case 3:
        return Formula::disjunction(raw(depth - 1), raw(depth - 1));
      default: {
        FormulaPtr body = raw(depth - 1);
        if (body->free().empty()) return body;
        std::vector<Var> free(body->free().begin(), body->free().end());
        Var v = free[pick(static_cast<int>(free.size()))];
        return pick(2) ? Formula::exists(v, body) : Formula::forall(v, body);
      }
    }
  }

  std::mt19937_64 rng_;
};

// Direct transcription of the satisfaction relation: every branch of every
// quantifier is evaluated, ranks come straight from the oracle.
class ReferenceEvaluator {
 public:
  explicit ReferenceEvaluator(const Matroid& m) : m_(m), n_(m.size()) {}

  bool eval(const Formula& f, const Interpretation& i) {
    sets_.clear();
    elems_.clear();
    for (const auto& [k, s] : i.sets()) sets_[k] = s;
    for (const auto& [k, e] : i.elements()) elems_[k] = e;
    return sat(f);
  }

 private:
  Subset set(const Term& t) {
    const auto& c = t.children();
    switch (t.kind()) {
      case TermKind::kSetVar:
        return sets_.at(t.variable().index);
      case TermKind::kGround:
        return Subset::full(n_);
      case TermKind::kEmpty:
        return Subset(n_);
      case TermKind::kSingleton:
        return Subset::from_indices(n_, {elems_.at(c[0]->variable().index)});
      case TermKind::kComplement:
        return Subset::full(n_) - set(*c[0]);
      case TermKind::kUnion:
        return set(*c[0]) | set(*c[1]);
      default:
        return set(*c[0]) & set(*c[1]);
    }
  }

  std::int64_t integer(const Term& t) {
    const auto& c = t.children();
    switch (t.kind()) {
      case TermKind::kConstant:
        return t.value();
      case TermKind::kCardinality:
        return static_cast<std::int64_t>(set(*c[0]).count());
      case TermKind::kRank:
        return m_.rank(set(*c[0]));
      default:
        return integer(*c[0]) + integer(*c[1]);
    }
  }

  bool sat(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kElementEq:
        return elems_.at(f.lhs()->variable().index) ==
               elems_.at(f.rhs()->variable().index);
      case FormulaKind::kSetEq:
        return set(*f.lhs()) == set(*f.rhs());
      case FormulaKind::kSubset:
        return (set(*f.lhs()) - set(*f.rhs())).empty();
      case FormulaKind::kIntEq:
        return integer(*f.lhs()) == integer(*f.rhs());
      case FormulaKind::kIntLe:
        return integer(*f.lhs()) <= integer(*f.rhs());
      case FormulaKind::kMember:
        return set(*f.rhs()).test(elems_.at(f.lhs()->variable().index));
      case FormulaKind::kNot:
        return !sat(*f.body());
      case FormulaKind::kOr: {
        bool a = sat(*f.children()[0]);
        bool b = sat(*f.children()[1]);
        return a || b;
      }
      case FormulaKind::kAnd: {
        bool a = sat(*f.children()[0]);
        bool b = sat(*f.children()[1]);
        return a && b;
      }
      default:
        break;
    }
    const Var& v = f.variable();
    std::vector<bool> results;
    if (v.sort == Sort::kSet) {
      auto saved = sets_.find(v.index) != sets_.end()
                       ? std::optional<Subset>(sets_[v.index])
                       : std::nullopt;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n_); ++x) {
        sets_[v.index] = Subset::from_mask(n_, x);
        results.push_back(sat(*f.body()));
      }
      if (saved) sets_[v.index] = *saved; else sets_.erase(v.index);
    } else {
      auto saved = elems_.find(v.index) != elems_.end()
                       ? std::optional<std::size_t>(elems_[v.index])
                       : std::nullopt;
      for (std::size_t e = 0; e < n_; ++e) {
        elems_[v.index] = e;
        results.push_back(sat(*f.body()));
      }
      if (saved) elems_[v.index] = *saved; else elems_.erase(v.index);
    }
    bool any = std::find(results.begin(), results.end(), true) != results.end();
    bool all = std::find(results.begin(), results.end(), false) == results.end();
    return f.kind() == FormulaKind::kExists ? any : all;
  }

  const Matroid& m_;
  std::size_t n_;
  std::map<int, Subset> sets_;
  std::map<int, std::size_t> elems_;
};

// Calls f on every interpretation of `vars` over an n-element ground set.
inline void for_each_interpretation(
    const VarSet& vars, std::size_t n,
    const std::function<void(const Interpretation&)>& f) {
  std::vector<Var> vs(vars.begin(), vars.end());
  Interpretation cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == vs.size()) {
      f(cur);
      return;
    }
    const Var& v = vs[k];
    if (v.sort == Sort::kSet) {
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        cur.assign_set(v.index, Subset::from_mask(n, x));
        rec(k + 1);
      }
    } else {
      for (std::size_t e = 0; e < n; ++e) {
        cur.assign_element(v.index, e);
        rec(k + 1);
      }
    }
  };
  rec(0);
}

}  // namespace mlogic::msol

#endif  // MLOGIC_TESTS_MSOL_FIXTURES_H_
