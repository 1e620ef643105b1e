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

#include "mlogic/msol/ast.h"

#include <algorithm>

#include "mlogic/errors.h"

namespace mlogic::msol {
namespace {

void require_sort(const TermPtr& t, Sort want, const char* where) {
  if (t->sort() != want) {
    throw ValidationError(std::string(where) + " expects a " +
                          sort_name(want) + " term, got a " +
                          sort_name(t->sort()) + " term");
  }
}

void merge(VarSet& into, const VarSet& from) {
  into.insert(from.begin(), from.end());
}

// Disjoint-from-the-other-side check for one ordered pair of operands.
std::optional<Var> collision(const Formula& p, const Formula& q) {
  for (const Var& v : p.free()) {
    if (q.vars().count(v) && !q.free().count(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::string sort_name(Sort s) {
  switch (s) {
    case Sort::kElement:
      return "element";
    case Sort::kSet:
      return "set";
    case Sort::kInteger:
      return "integer";
  }
  return "?";
}

std::string Var::name() const {
  return (sort == Sort::kSet ? "X" : "x") + std::to_string(index);
}

// --- terms -------------------------------------------------------------------

TermPtr Term::make(TermKind kind, Sort sort, std::vector<TermPtr> children) {
  auto t = std::shared_ptr<Term>(new Term(kind, sort));
  for (const auto& c : children) merge(t->vars_, c->vars());
  t->children_ = std::move(children);
  return t;
}

TermPtr Term::var(Var v) {
  if (v.sort == Sort::kInteger) {
    throw ValidationError("there are no integer variables");
  }
  auto t = std::shared_ptr<Term>(new Term(
      v.sort == Sort::kSet ? TermKind::kSetVar : TermKind::kElementVar,
      v.sort));
  t->var_ = v;
  t->vars_.insert(v);
  return t;
}

TermPtr Term::ground() { return make(TermKind::kGround, Sort::kSet, {}); }
TermPtr Term::empty() { return make(TermKind::kEmpty, Sort::kSet, {}); }

TermPtr Term::singleton(TermPtr element) {
  require_sort(element, Sort::kElement, "sing");
  return make(TermKind::kSingleton, Sort::kSet, {std::move(element)});
}

TermPtr Term::complement(TermPtr set) {
  require_sort(set, Sort::kSet, "comp");
  return make(TermKind::kComplement, Sort::kSet, {std::move(set)});
}

TermPtr Term::union_of(TermPtr a, TermPtr b) {
  require_sort(a, Sort::kSet, "union");
  require_sort(b, Sort::kSet, "union");
  return make(TermKind::kUnion, Sort::kSet, {std::move(a), std::move(b)});
}

TermPtr Term::intersection(TermPtr a, TermPtr b) {
  require_sort(a, Sort::kSet, "inter");
  require_sort(b, Sort::kSet, "inter");
  return make(TermKind::kIntersection, Sort::kSet,
              {std::move(a), std::move(b)});
}

TermPtr Term::constant(std::int64_t value) {
  auto t = std::shared_ptr<Term>(new Term(TermKind::kConstant, Sort::kInteger));
  t->value_ = value;
  return t;
}

TermPtr Term::cardinality(TermPtr set) {
  require_sort(set, Sort::kSet, "card");
  return make(TermKind::kCardinality, Sort::kInteger, {std::move(set)});
}

TermPtr Term::rank(TermPtr set) {
  require_sort(set, Sort::kSet, "r");
  return make(TermKind::kRank, Sort::kInteger, {std::move(set)});
}

TermPtr Term::sum(TermPtr a, TermPtr b) {
  require_sort(a, Sort::kInteger, "+");
  require_sort(b, Sort::kInteger, "+");
  return make(TermKind::kSum, Sort::kInteger, {std::move(a), std::move(b)});
}

// --- formulas ----------------------------------------------------------------

FormulaPtr Formula::atom(FormulaKind kind, TermPtr a, TermPtr b) {
  auto f = std::shared_ptr<Formula>(new Formula(kind));
  merge(f->vars_, a->vars());
  merge(f->vars_, b->vars());
  f->free_ = f->vars_;
  f->terms_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::equals(TermPtr a, TermPtr b) {
  if (a->sort() != b->sort()) {
    throw ValidationError("'=' between a " + sort_name(a->sort()) +
                          " term and a " + sort_name(b->sort()) + " term");
  }
  FormulaKind kind = a->sort() == Sort::kElement ? FormulaKind::kElementEq
                     : a->sort() == Sort::kSet   ? FormulaKind::kSetEq
                                                 : FormulaKind::kIntEq;
  return atom(kind, std::move(a), std::move(b));
}

FormulaPtr Formula::subseteq(TermPtr a, TermPtr b) {
  require_sort(a, Sort::kSet, "subseteq");
  require_sort(b, Sort::kSet, "subseteq");
  return atom(FormulaKind::kSubset, std::move(a), std::move(b));
}

FormulaPtr Formula::less_equal(TermPtr a, TermPtr b) {
  require_sort(a, Sort::kInteger, "<=");
  require_sort(b, Sort::kInteger, "<=");
  return atom(FormulaKind::kIntLe, std::move(a), std::move(b));
}

FormulaPtr Formula::member(TermPtr element, TermPtr set) {
  require_sort(element, Sort::kElement, "in");
  require_sort(set, Sort::kSet, "in");
  return atom(FormulaKind::kMember, std::move(element), std::move(set));
}

FormulaPtr Formula::negation(FormulaPtr g) {
  auto f = std::shared_ptr<Formula>(new Formula(FormulaKind::kNot));
  f->free_ = g->free();
  f->vars_ = g->vars();
  f->children_ = {std::move(g)};
  return f;
}

FormulaPtr Formula::disjunction(FormulaPtr a, FormulaPtr b) {
  auto f = std::shared_ptr<Formula>(new Formula(FormulaKind::kOr));
  f->free_ = a->free();
  merge(f->free_, b->free());
  f->vars_ = a->vars();
  merge(f->vars_, b->vars());
  f->children_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::conjunction(FormulaPtr a, FormulaPtr b) {
  auto f = std::shared_ptr<Formula>(new Formula(FormulaKind::kAnd));
  f->free_ = a->free();
  merge(f->free_, b->free());
  f->vars_ = a->vars();
  merge(f->vars_, b->vars());
  f->children_ = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::quantifier(FormulaKind kind, Var v, FormulaPtr body) {
  if (kind != FormulaKind::kExists && kind != FormulaKind::kForall) {
    throw ValidationError("not a quantifier kind");
  }
  if (v.sort == Sort::kInteger) {
    throw ValidationError("cannot quantify over integers");
  }
  if (!body->free().count(v)) {
    throw ValidationError("cannot quantify " + v.name() +
                          ": it is not free in the quantified formula");
  }
  auto f = std::shared_ptr<Formula>(new Formula(kind));
  f->var_ = v;
  f->free_ = body->free();
  f->free_.erase(v);
  f->vars_ = body->vars();
  f->children_ = {std::move(body)};
  return f;
}

FormulaPtr Formula::exists(Var v, FormulaPtr body) {
  return quantifier(FormulaKind::kExists, v, std::move(body));
}

FormulaPtr Formula::forall(Var v, FormulaPtr body) {
  return quantifier(FormulaKind::kForall, v, std::move(body));
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return disjunction(negation(std::move(a)), std::move(b));
}

FormulaPtr Formula::less(TermPtr a, TermPtr b) {
  return conjunction(less_equal(a, b), negation(equals(a, b)));
}

// --- utilities ---------------------------------------------------------------

bool equal(const Term& a, const Term& b) {
  if (a.kind() != b.kind() || a.children().size() != b.children().size()) {
    return false;
  }
  switch (a.kind()) {
    case TermKind::kElementVar:
    case TermKind::kSetVar:
      return a.variable() == b.variable();
    case TermKind::kConstant:
      return a.value() == b.value();
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!equal(*a.children()[i], *b.children()[i])) return false;
  }
  return true;
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_atomic()) return equal(*a.lhs(), *b.lhs()) && equal(*a.rhs(), *b.rhs());
  if (a.is_quantifier() && !(a.variable() == b.variable())) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!equal(*a.children()[i], *b.children()[i])) return false;
  }
  return true;
}

std::optional<Var> rule5_violation(const Formula& f) {
  if (f.is_atomic()) return std::nullopt;
  for (const auto& c : f.children()) {
    if (auto v = rule5_violation(*c)) return v;
  }
  if (f.is_binary()) {
    const Formula& p = *f.children()[0];
    const Formula& q = *f.children()[1];
    if (auto v = collision(p, q)) return v;
    if (auto v = collision(q, p)) return v;
  }
  return std::nullopt;
}

void check_well_formed(const Formula& f) {
  if (auto v = rule5_violation(f)) {
    throw ValidationError("variable " + v->name() +
                          " is free in one operand and bound in the other");
  }
}

TermPtr substitute(const TermPtr& t, const Var& from, const Var& to) {
  if (!t->vars().count(from)) return t;
  switch (t->kind()) {
    case TermKind::kElementVar:
    case TermKind::kSetVar:
      return Term::var(to);
    case TermKind::kSingleton:
      return Term::singleton(substitute(t->children()[0], from, to));
    case TermKind::kComplement:
      return Term::complement(substitute(t->children()[0], from, to));
    case TermKind::kCardinality:
      return Term::cardinality(substitute(t->children()[0], from, to));
    case TermKind::kRank:
      return Term::rank(substitute(t->children()[0], from, to));
    case TermKind::kUnion:
      return Term::union_of(substitute(t->children()[0], from, to),
                            substitute(t->children()[1], from, to));
    case TermKind::kIntersection:
      return Term::intersection(substitute(t->children()[0], from, to),
                                substitute(t->children()[1], from, to));
    case TermKind::kSum:
      return Term::sum(substitute(t->children()[0], from, to),
                       substitute(t->children()[1], from, to));
    default:
      return t;
  }
}

FormulaPtr substitute(const FormulaPtr& f, const Var& from, const Var& to) {
  if (!f->vars().count(from)) return f;
  switch (f->kind()) {
    case FormulaKind::kElementEq:
    case FormulaKind::kSetEq:
    case FormulaKind::kIntEq:
      return Formula::equals(substitute(f->lhs(), from, to),
                             substitute(f->rhs(), from, to));
    case FormulaKind::kSubset:
      return Formula::subseteq(substitute(f->lhs(), from, to),
                               substitute(f->rhs(), from, to));
    case FormulaKind::kIntLe:
      return Formula::less_equal(substitute(f->lhs(), from, to),
                                 substitute(f->rhs(), from, to));
    case FormulaKind::kMember:
      return Formula::member(substitute(f->lhs(), from, to),
                             substitute(f->rhs(), from, to));
    case FormulaKind::kNot:
      return Formula::negation(substitute(f->body(), from, to));
    case FormulaKind::kOr:
      return Formula::disjunction(substitute(f->children()[0], from, to),
                                  substitute(f->children()[1], from, to));
    case FormulaKind::kAnd:
      return Formula::conjunction(substitute(f->children()[0], from, to),
                                  substitute(f->children()[1], from, to));
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      Var v = f->variable() == from ? to : f->variable();
      return Formula::quantifier(f->kind(), v, substitute(f->body(), from, to));
    }
  }
  return f;
}

int max_index(const Formula& f, Sort sort) {
  int best = 0;
  for (const Var& v : f.vars()) {
    if (v.sort == sort) best = std::max(best, v.index);
  }
  return best;
}

std::size_t count_quantifiers(const Formula& f) {
  std::size_t n = f.is_quantifier() ? 1 : 0;
  for (const auto& c : f.children()) n += count_quantifiers(*c);
  return n;
}

}  // namespace mlogic::msol
