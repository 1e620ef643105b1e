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

#include "mlogic/msol/transform.h"

#include <algorithm>
#include <set>

namespace mlogic::msol {
namespace {

class Fresh {
 public:
  explicit Fresh(const Formula& f)
      : next_set_(max_index(f, Sort::kSet) + 1),
        next_elem_(max_index(f, Sort::kElement) + 1) {}
  Var make(Sort s) {
    return s == Sort::kSet ? Var::set(next_set_++) : Var::element(next_elem_++);
  }

 private:
  int next_set_;
  int next_elem_;
};

FormulaKind kind_of(Quantifier q) {
  return q == Quantifier::kExists ? FormulaKind::kExists : FormulaKind::kForall;
}

Quantifier flip(Quantifier q) {
  return q == Quantifier::kExists ? Quantifier::kForall : Quantifier::kExists;
}

FormulaPtr combine(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
  return kind == FormulaKind::kAnd ? Formula::conjunction(std::move(a), std::move(b))
                                   : Formula::disjunction(std::move(a), std::move(b));
}

FormulaPtr fix_conflicts(const FormulaPtr& f, Fresh& fresh) {
  if (f->is_atomic()) return f;
  if (f->kind() == FormulaKind::kNot) {
    return Formula::negation(fix_conflicts(f->body(), fresh));
  }
  if (f->is_quantifier()) {
    return Formula::quantifier(f->kind(), f->variable(),
                               fix_conflicts(f->body(), fresh));
  }
  FormulaPtr a = fix_conflicts(f->children()[0], fresh);
  FormulaPtr b = fix_conflicts(f->children()[1], fresh);
  auto bound_only = [](const Formula& g, const Var& v) {
    return g.vars().count(v) && !g.free().count(v);
  };
  for (const Var& v : VarSet(a->free())) {
    if (bound_only(*b, v)) b = substitute(b, v, fresh.make(v.sort));
  }
  for (const Var& v : VarSet(b->free())) {
    if (bound_only(*a, v)) a = substitute(a, v, fresh.make(v.sort));
  }
  return combine(f->kind(), a, b);
}

struct Pnf {
  std::vector<PrefixEntry> prefix;
  FormulaPtr matrix;

  bool binds(const Var& v) const {
    return std::any_of(prefix.begin(), prefix.end(),
                       [&](const PrefixEntry& e) { return e.var == v; });
  }
  void rename(const Var& from, const Var& to) {
    for (auto& e : prefix) {
      if (e.var == from) e.var = to;
    }
    matrix = substitute(matrix, from, to);
  }
};

Pnf to_pnf(const FormulaPtr& f, Fresh& fresh) {
  if (f->is_atomic()) return {{}, f};
  if (f->kind() == FormulaKind::kNot) {
    Pnf p = to_pnf(f->body(), fresh);
    for (auto& e : p.prefix) e.quantifier = flip(e.quantifier);
    p.matrix = Formula::negation(p.matrix);
    return p;
  }
  if (f->is_quantifier()) {
    Pnf p = to_pnf(f->body(), fresh);
    const Var& v = f->variable();
    if (p.binds(v)) p.rename(v, fresh.make(v.sort));
    Quantifier q = f->kind() == FormulaKind::kExists ? Quantifier::kExists
                                                     : Quantifier::kForall;
    p.prefix.insert(p.prefix.begin(), PrefixEntry{q, v});
    return p;
  }
  const FormulaPtr& left = f->children()[0];
  const FormulaPtr& right = f->children()[1];
  Pnf a = to_pnf(left, fresh);
  Pnf b = to_pnf(right, fresh);
  // Pulled-out variables must not capture free variables of the other
  // operand, and the two prefixes must bind distinct variables.
  for (auto& e : std::vector<PrefixEntry>(a.prefix)) {
    if (right->free().count(e.var)) a.rename(e.var, fresh.make(e.var.sort));
  }
  for (auto& e : std::vector<PrefixEntry>(b.prefix)) {
    if (left->free().count(e.var) || a.binds(e.var)) {
      b.rename(e.var, fresh.make(e.var.sort));
    }
  }
  Pnf out;
  out.prefix = a.prefix;
  out.prefix.insert(out.prefix.end(), b.prefix.begin(), b.prefix.end());
  out.matrix = combine(f->kind(), a.matrix, b.matrix);
  return out;
}

}  // namespace

std::string quantifier_name(Quantifier q) {
  return q == Quantifier::kExists ? "exists" : "forall";
}

FormulaPtr PrenexForm::to_formula() const {
  FormulaPtr f = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    f = Formula::quantifier(kind_of(it->quantifier), it->var, f);
  }
  return f;
}

std::string PrenexForm::prefix_text() const {
  std::string out;
  for (const auto& e : prefix) {
    if (!out.empty()) out += ' ';
    out += quantifier_name(e.quantifier) + " " + e.var.name();
  }
  return out;
}

FormulaPtr rename_bound_conflicts(const FormulaPtr& f) {
  Fresh fresh(*f);
  return fix_conflicts(f, fresh);
}

PrenexForm prenex(const FormulaPtr& f) {
  Fresh fresh(*f);
  Pnf p = to_pnf(f, fresh);
  return {std::move(p.prefix), std::move(p.matrix)};
}

PrenexForm elementwise_to_set(const PrenexForm& p) {
  PrenexForm out = p;
  Fresh fresh(*p.to_formula());
  while (true) {
    auto last_set = std::find_if(out.prefix.rbegin(), out.prefix.rend(),
                                 [](const PrefixEntry& e) {
                                   return e.var.sort == Sort::kSet;
                                 });
    if (last_set == out.prefix.rend()) break;
    auto limit = last_set.base();  // one past the last set quantifier
    auto elem = std::find_if(out.prefix.begin(), limit, [](const PrefixEntry& e) {
      return e.var.sort == Sort::kElement;
    });
    if (elem == limit) break;
    const Var x = elem->var;
    const Quantifier q = elem->quantifier;
    const Var big = fresh.make(Sort::kSet);
    elem->var = big;
    FormulaPtr guard = Formula::equals(Term::var(big), Term::singleton(Term::var(x)));
    FormulaPtr m = Formula::implies(guard, out.matrix);
    if (q == Quantifier::kExists) {
      m = Formula::conjunction(
          Formula::equals(Term::cardinality(Term::var(big)), Term::constant(1)), m);
    }
    out.matrix = m;
    out.prefix.push_back(PrefixEntry{Quantifier::kForall, x});
  }
  return out;
}

Classification classify_mlogic(const FormulaPtr& f) {
  Classification c;
  c.normal_form = elementwise_to_set(prenex(f));
  std::set<Quantifier> set_kinds, elem_kinds;
  for (const auto& e : c.normal_form.prefix) {
    (e.var.sort == Sort::kSet ? set_kinds : elem_kinds).insert(e.quantifier);
  }
  c.mlogic = set_kinds.size() <= 1 && elem_kinds.size() <= 1;
  auto kinds = [](const std::set<Quantifier>& ks) {
    if (ks.empty()) return std::string("none");
    std::string s;
    for (Quantifier q : ks) s += (s.empty() ? "" : ",") + quantifier_name(q);
    return s;
  };
  c.summary = std::string(c.mlogic ? "MLogic" : "NotNormalizable") +
              " (sets: " + kinds(set_kinds) + "; elements: " + kinds(elem_kinds) +
              ")";
  return c;
}

}  // namespace mlogic::msol
