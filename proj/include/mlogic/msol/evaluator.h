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

// Satisfaction of MSOL formulas in a matroid under an interpretation.

#ifndef MLOGIC_MSOL_EVALUATOR_H_
#define MLOGIC_MSOL_EVALUATOR_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlogic/matroid.h"
#include "mlogic/msol/ast.h"

namespace mlogic::msol {

// φ_S assigns set variables to subsets, φ_E element variables to elements
// (by ground-set index).
class Interpretation {
 public:
  void assign_set(int index, Subset s) { sets_[index] = std::move(s); }
  void assign_element(int index, std::size_t e) { elements_[index] = e; }

  const std::map<int, Subset>& sets() const { return sets_; }
  const std::map<int, std::size_t>& elements() const { return elements_; }
  VarSet domain() const;
  bool empty() const { return sets_.empty() && elements_.empty(); }

 private:
  std::map<int, Subset> sets_;
  std::map<int, std::size_t> elements_;
};

// Default budget exponent: MLOGIC_BUDGET_LOG2 from the environment, or 34.
double default_budget_log2();

struct EvalOptions {
  // Refuse formulas whose quantifier nesting multiplies out to more than
  // 2^budget_log2 branches along some path. Unset means the default.
  std::optional<double> budget_log2;
  bool force = false;  // skip the budget check
  // Worker threads for the outermost quantifier; the answer and any trace
  // do not depend on this.
  unsigned jobs = 1;
  // Accept assignments to variables that are not free in the formula.
  bool allow_extra_assignments = false;
  // Record witnesses / counterexamples for the outermost quantifier block.
  bool trace = false;
};

struct TraceEntry {
  Var var;
  Subset set;               // set variables
  std::size_t element = 0;  // element variables
};

struct EvalResult {
  bool value = false;
  // Filled when tracing and the outermost block is ∃ and true (witness) or
  // ∀ and false (counterexample).
  std::vector<TraceEntry> trace;
};

// Throws ResourceError when over budget, naming the quantifier that crosses
// it, and DomainError when the interpretation does not cover the free
// variables (or, unless allowed, assigns others).
EvalResult evaluate_full(const Matroid& m, const Formula& f,
                         const Interpretation& i = {},
                         const EvalOptions& options = {});

inline bool evaluate(const Matroid& m, const Formula& f,
                     const Interpretation& i = {},
                     const EvalOptions& options = {}) {
  return evaluate_full(m, f, i, options).value;
}

// Denotation of a set term on an n-element ground set. Throws DomainError
// if the term mentions a variable the interpretation does not assign.
Subset denote(const Term& t, const Interpretation& i, std::size_t n);

// log2 of the largest product of quantifier branch counts along a path, for
// a ground set of n elements.
double branch_cost_log2(const Formula& f, std::size_t n);

// "X1 = {a, b}" or "x1 = a".
std::string format_trace_entry(const GroundSet& g, const TraceEntry& e);

}  // namespace mlogic::msol

#endif  // MLOGIC_MSOL_EVALUATOR_H_
