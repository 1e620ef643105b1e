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

// Matroid axiom schemes as M-logic sentences, and minor-detection sentences
// compiled from a fixed matroid.

#ifndef MLOGIC_AXIOMS_H_
#define MLOGIC_AXIOMS_H_

#include <string>
#include <string_view>
#include <vector>

#include "mlogic/matroid.h"
#include "mlogic/msol/ast.h"
#include "mlogic/msol/evaluator.h"

namespace mlogic {

struct NamedSentence {
  std::string name;  // "R1", ..., "S3", "PAVING"
  msol::FormulaPtr formula;
};

// R1-R3, I1-I3, B1-B2, S1-S3 and PAVING. The shorthands
//   I(X) = (r(X) = card(X))
//   B(X) = I(X) and (r(X) = r(E))
//   S(X) = (r(X) = r(E))
// are expanded in the stored formulas.
class SentenceLibrary {
 public:
  static const SentenceLibrary& instance();

  const std::vector<NamedSentence>& all() const { return sentences_; }
  // Throws DomainError for an unknown name.
  const NamedSentence& get(std::string_view name) const;

 private:
  SentenceLibrary();
  std::vector<NamedSentence> sentences_;
};

enum class Suite { kRank, kIndependence, kBasis, kSpanning, kPaving };

// "rank", "indep", "basis", "spanning", "paving"; DomainError otherwise.
Suite parse_suite(std::string_view name);
std::string suite_name(Suite s);
std::vector<std::string> suite_sentences(Suite s);

// Largest matroid minor_sentence accepts.
inline constexpr std::size_t kMaxMinorElements = 6;

// exists X1 exists x1 ... exists xm P_N for N on m elements: X1 is
// independent and disjoint from m distinct elements x1..xm, and for every
// S within {1..m}, r(X1 union {x_i : i in S}) = r(X1) + r_N(S), with r_N(S)
// written as a constant. Holds in a matroid iff it has an N-minor.
// Throws DomainError if N is empty or larger than kMaxMinorElements and
// ValidationError if N is not a matroid.
msol::FormulaPtr minor_sentence(const Matroid& n);

// The negated minor sentences, one per excluded minor.
std::vector<msol::FormulaPtr> excluded_minor_axioms(
    const std::vector<Matroid>& excluded);

struct SentenceVerdict {
  std::string name;
  bool holds = false;
  // Witness of a true outer exists, or counterexample to a false outer
  // forall.
  std::vector<msol::TraceEntry> trace;
};

struct SuiteReport {
  Suite suite;
  std::vector<SentenceVerdict> verdicts;

  bool all_hold() const;
};

// Evaluates each sentence of the suite with tracing on. A ResourceError
// names the sentence that was over budget.
SuiteReport axiom_suite_check(const Matroid& m, Suite suite,
                              msol::EvalOptions options = {});

}  // namespace mlogic

#endif  // MLOGIC_AXIOMS_H_
