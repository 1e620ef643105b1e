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

// Abstract syntax for monadic second-order logic over matroids.
//
// Terms come in three sorts. Element terms are variables x_i. Set terms are
// E, ∅, X_i, {x_i}, complements, unions and intersections. Integer terms are
// constants, |X|, r(X) and sums. Formulas are the atoms x = y, X = Y,
// X ⊆ Y, p = q, p ≤ q, x ∈ X closed under ¬, ∨, ∧, ∃ and ∀.
//
// Nodes are immutable and shared. Each caches its variable set and, for
// formulas, its free variables.

#ifndef MLOGIC_MSOL_AST_H_
#define MLOGIC_MSOL_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mlogic::msol {

enum class Sort : std::uint8_t { kElement, kSet, kInteger };

std::string sort_name(Sort s);

struct Var {
  Sort sort = Sort::kSet;
  int index = 0;

  static Var set(int i) { return {Sort::kSet, i}; }
  static Var element(int i) { return {Sort::kElement, i}; }

  // "X3" or "x3".
  std::string name() const;

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var&, const Var&) = default;
};

using VarSet = std::set<Var>;

class Term;
class Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class TermKind : std::uint8_t {
  kElementVar,
  kSetVar,
  kGround,  // E
  kEmpty,
  kSingleton,
  kComplement,
  kUnion,
  kIntersection,
  kConstant,
  kCardinality,
  kRank,
  kSum,
};

// Factories throw ValidationError when child sorts do not fit.
class Term {
 public:
  static TermPtr var(Var v);
  static TermPtr element(int i) { return var(Var::element(i)); }
  static TermPtr set(int i) { return var(Var::set(i)); }
  static TermPtr ground();
  static TermPtr empty();
  static TermPtr singleton(TermPtr element);
  static TermPtr complement(TermPtr set);
  static TermPtr union_of(TermPtr a, TermPtr b);
  static TermPtr intersection(TermPtr a, TermPtr b);
  static TermPtr constant(std::int64_t value);
  static TermPtr cardinality(TermPtr set);
  static TermPtr rank(TermPtr set);
  static TermPtr sum(TermPtr a, TermPtr b);

  TermKind kind() const { return kind_; }
  Sort sort() const { return sort_; }
  // For variables only.
  const Var& variable() const { return var_; }
  std::int64_t value() const { return value_; }
  const std::vector<TermPtr>& children() const { return children_; }
  const VarSet& vars() const { return vars_; }

 private:
  Term(TermKind kind, Sort sort) : kind_(kind), sort_(sort) {}
  static TermPtr make(TermKind kind, Sort sort, std::vector<TermPtr> children);

  TermKind kind_;
  Sort sort_;
  Var var_;
  std::int64_t value_ = 0;
  std::vector<TermPtr> children_;
  VarSet vars_;
};

enum class FormulaKind : std::uint8_t {
  kElementEq,
  kSetEq,
  kSubset,
  kIntEq,
  kIntLe,
  kMember,
  kNot,
  kOr,
  kAnd,
  kExists,
  kForall,
};

// Factories enforce sorts, and that a quantified variable is free in the
// body. The free/bound collision rule for ∨ and ∧ is checked separately by
// check_well_formed so that ill-formed input can still be repaired.
class Formula {
 public:
  // x = y, X = Y or p = q according to the operand sort.
  static FormulaPtr equals(TermPtr a, TermPtr b);
  static FormulaPtr subseteq(TermPtr a, TermPtr b);
  static FormulaPtr less_equal(TermPtr a, TermPtr b);
  static FormulaPtr member(TermPtr element, TermPtr set);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr exists(Var v, FormulaPtr body);
  static FormulaPtr forall(Var v, FormulaPtr body);
  static FormulaPtr quantifier(FormulaKind kind, Var v, FormulaPtr body);

  // Abbreviations, expanded on construction.
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);  // ¬a ∨ b
  static FormulaPtr less(TermPtr a, TermPtr b);           // a ≤ b ∧ ¬(a = b)

  FormulaKind kind() const { return kind_; }
  bool is_atomic() const { return kind_ <= FormulaKind::kMember; }
  bool is_quantifier() const {
    return kind_ == FormulaKind::kExists || kind_ == FormulaKind::kForall;
  }
  bool is_binary() const {
    return kind_ == FormulaKind::kOr || kind_ == FormulaKind::kAnd;
  }

  // Atom operands.
  const TermPtr& lhs() const { return terms_[0]; }
  const TermPtr& rhs() const { return terms_[1]; }
  // Subformulas: one for ¬ and quantifiers, two for ∨ and ∧.
  const std::vector<FormulaPtr>& children() const { return children_; }
  const FormulaPtr& body() const { return children_[0]; }
  // Quantified variable.
  const Var& variable() const { return var_; }

  const VarSet& free() const { return free_; }
  const VarSet& vars() const { return vars_; }
  bool is_sentence() const { return free_.empty(); }

 private:
  explicit Formula(FormulaKind kind) : kind_(kind) {}
  static FormulaPtr atom(FormulaKind kind, TermPtr a, TermPtr b);

  FormulaKind kind_;
  std::vector<TermPtr> terms_;
  std::vector<FormulaPtr> children_;
  Var var_;
  VarSet free_;
  VarSet vars_;
};

bool equal(const Term& a, const Term& b);
bool equal(const Formula& a, const Formula& b);

// A variable free in one operand of some ∨/∧ and bound in the other.
std::optional<Var> rule5_violation(const Formula& f);
// Throws ValidationError naming the variable.
void check_well_formed(const Formula& f);

// Replaces every occurrence of `from`, bound or free, by `to`.
TermPtr substitute(const TermPtr& t, const Var& from, const Var& to);
FormulaPtr substitute(const FormulaPtr& f, const Var& from, const Var& to);

// Largest index used by a variable of the given sort, or 0.
int max_index(const Formula& f, Sort sort);

std::size_t count_quantifiers(const Formula& f);

}  // namespace mlogic::msol

#endif  // MLOGIC_MSOL_AST_H_
