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

// Syntactic rewrites: bound-variable renaming, prenex form, moving element
// quantifiers behind set quantifiers, and the M-logic shape test.

#ifndef MLOGIC_MSOL_TRANSFORM_H_
#define MLOGIC_MSOL_TRANSFORM_H_

#include <string>
#include <vector>

#include "mlogic/msol/ast.h"

namespace mlogic::msol {

enum class Quantifier { kExists, kForall };

std::string quantifier_name(Quantifier q);  // "exists" / "forall"

struct PrefixEntry {
  Quantifier quantifier;
  Var var;

  friend bool operator==(const PrefixEntry&, const PrefixEntry&) = default;
};

struct PrenexForm {
  std::vector<PrefixEntry> prefix;
  FormulaPtr matrix;  // quantifier-free

  FormulaPtr to_formula() const;
  // "forall X1 forall X2 exists x1", or "" for an empty prefix.
  std::string prefix_text() const;
};

// Alpha-renames bound variables so that no variable is free in one operand
// of an 'and'/'or' and bound in the other. Each offending variable is
// renamed, inside the operand where it is bound, to the next unused index
// of its sort.
FormulaPtr rename_bound_conflicts(const FormulaPtr& f);

// Pushes negations through quantifiers and pulls quantifiers out of 'and'
// and 'or', left operand first. Bound variables that would be captured, or
// that repeat across operands, are renamed to fresh indices. Equivalent to
// the input on every matroid with a nonempty ground set.
PrenexForm prenex(const FormulaPtr& f);

// Rewrites each element quantifier that precedes a set quantifier:
//
//   forall x P  ~>  forall X P'  with  forall x ((X = {x}) -> M)  innermost
//   exists x P  ~>  exists X P'  with  forall x ((card(X) = 1) and
//                                                ((X = {x}) -> M))  innermost
//
// where X is fresh and M is the matrix. The cardinality guard in the
// existential case stops X = ∅ from satisfying the guard vacuously.
// Equivalent on nonempty ground sets.
PrenexForm elementwise_to_set(const PrenexForm& p);

struct Classification {
  bool mlogic = false;
  // The normalized prefix and its quantifier kinds per sort.
  PrenexForm normal_form;
  std::string summary;
};

// Sufficient-only test: normalizes with prenex and elementwise_to_set and
// reports M-logic iff the set quantifiers share one kind and the element
// quantifiers share one kind.
Classification classify_mlogic(const FormulaPtr& f);

}  // namespace mlogic::msol

#endif  // MLOGIC_MSOL_TRANSFORM_H_
