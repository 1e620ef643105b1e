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

#include "mlogic/axioms.h"

#include <algorithm>

#include "mlogic/errors.h"
#include "mlogic/msol/parser.h"
#include "mlogic/validate.h"

namespace mlogic {

using msol::Formula;
using msol::FormulaPtr;
using msol::Term;
using msol::TermPtr;
using msol::Var;

namespace {

std::string I(const std::string& x) { return "(r(" + x + ") = card(" + x + "))"; }
std::string B(const std::string& x) {
  return "(" + I(x) + " and (r(" + x + ") = r(E)))";
}
std::string S(const std::string& x) { return "(r(" + x + ") = r(E))"; }

std::vector<std::pair<std::string, std::string>> library_texts() {
  return {
      {"R1", "forall X1 (r(X1) <= card(X1))"},
      {"R2", "forall X1 forall X2 ((X1 subseteq X2) -> (r(X1) <= r(X2)))"},
      {"R3",
       "forall X1 forall X2 "
       "((r(X1 union X2) + r(X1 inter X2)) <= (r(X1) + r(X2)))"},
      {"I1", I("empty")},
      {"I2",
       "forall X1 forall X2 ((" + I("X2") + " and (X1 subseteq X2)) -> " +
           I("X1") + ")"},
      {"I3",
       "forall X1 forall X2 exists x1 (((" + I("X1") + " and " + I("X2") +
           ") and (card(X1) < card(X2))) -> "
           "(((x1 notin X1) and (x1 in X2)) and " +
           I("X1 union sing(x1)") + "))"},
      {"B1", "exists X1 " + B("X1")},
      {"B2",
       "forall X1 forall X2 forall X3 exists x1 (((((" + B("X1") + " and " +
           B("X2") +
           ") and (card(X3) = 1)) and (X3 subseteq X1)) and "
           "(X3 nsubseteq X2)) -> (((x1 notin X1) and (x1 in X2)) and " +
           B("(X1 minus X3) union sing(x1)") + "))"},
      {"S1", "exists X1 " + S("X1")},
      {"S2",
       "forall X1 forall X2 ((" + S("X1") + " and (X1 subseteq X2)) -> " +
           S("X2") + ")"},
      {"S3",
       "forall X1 forall X2 exists x1 (((" + S("X1") + " and " + S("X2") +
           ") and (card(X1) < card(X2))) -> "
           "(((x1 notin X1) and (x1 in X2)) and " +
           S("X2 minus sing(x1)") + "))"},
      {"PAVING", "forall X1 ((card(X1) < r(E)) -> (r(X1) = card(X1)))"},
  };
}

FormulaPtr conjoin(FormulaPtr acc, FormulaPtr next) {
  return acc ? Formula::conjunction(std::move(acc), std::move(next)) : next;
}

TermPtr union_all(const std::vector<TermPtr>& terms) {
  TermPtr acc;
  for (const auto& t : terms) acc = acc ? Term::union_of(acc, t) : t;
  return acc;
}

}  // namespace

SentenceLibrary::SentenceLibrary() {
  for (auto& [name, text] : library_texts()) {
    sentences_.push_back({name, msol::parse_formula(text)});
  }
}

const SentenceLibrary& SentenceLibrary::instance() {
  static const SentenceLibrary library;
  return library;
}

const NamedSentence& SentenceLibrary::get(std::string_view name) const {
  for (const auto& s : sentences_) {
    if (s.name == name) return s;
  }
  throw DomainError("unknown sentence: " + std::string(name));
}

Suite parse_suite(std::string_view name) {
  if (name == "rank") return Suite::kRank;
  if (name == "indep") return Suite::kIndependence;
  if (name == "basis") return Suite::kBasis;
  if (name == "spanning") return Suite::kSpanning;
  if (name == "paving") return Suite::kPaving;
  throw DomainError("unknown suite '" + std::string(name) +
                    "' (expected rank, indep, basis, spanning or paving)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kRank:
      return "rank";
    case Suite::kIndependence:
      return "indep";
    case Suite::kBasis:
      return "basis";
    case Suite::kSpanning:
      return "spanning";
    case Suite::kPaving:
      return "paving";
  }
  return "?";
}

std::vector<std::string> suite_sentences(Suite s) {
  switch (s) {
    case Suite::kRank:
      return {"R1", "R2", "R3"};
    case Suite::kIndependence:
      return {"I1", "I2", "I3"};
    case Suite::kBasis:
      return {"B1", "B2"};
    case Suite::kSpanning:
      return {"S1", "S2", "S3"};
    case Suite::kPaving:
      return {"PAVING"};
  }
  return {};
}

FormulaPtr minor_sentence(const Matroid& n) {
  const std::size_t m = n.size();
  if (m == 0) throw DomainError("minor sentence needs a nonempty matroid");
  if (m > kMaxMinorElements) {
    throw DomainError("minor sentence refuses " + std::to_string(m) +
                      " elements (limit " + std::to_string(kMaxMinorElements) +
                      ")");
  }
  ValidationOptions strict;
  strict.strict = true;
  validate_matroid(n, strict);

  const TermPtr x1 = Term::set(1);
  std::vector<TermPtr> sing;
  for (std::size_t i = 0; i < m; ++i) {
    sing.push_back(Term::singleton(Term::element(static_cast<int>(i) + 1)));
  }
  FormulaPtr p = Formula::equals(Term::rank(x1), Term::cardinality(x1));
  p = conjoin(p, Formula::equals(Term::intersection(x1, union_all(sing)),
                                 Term::empty()));
  p = conjoin(p, Formula::equals(Term::cardinality(union_all(sing)),
                                 Term::constant(static_cast<std::int64_t>(m))));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Subset s = Subset::from_mask(m, mask);
    std::vector<TermPtr> parts = {x1};
    s.for_each([&](std::size_t i) { parts.push_back(sing[i]); });
    p = conjoin(p, Formula::equals(
                       Term::rank(union_all(parts)),
                       Term::sum(Term::rank(x1), Term::constant(n.rank(s)))));
  }
  for (std::size_t i = m; i-- > 0;) {
    p = Formula::exists(Var::element(static_cast<int>(i) + 1), p);
  }
  return Formula::exists(Var::set(1), p);
}

std::vector<FormulaPtr> excluded_minor_axioms(const std::vector<Matroid>& excluded) {
  std::vector<FormulaPtr> out;
  for (const auto& n : excluded) out.push_back(Formula::negation(minor_sentence(n)));
  return out;
}

bool SuiteReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const SentenceVerdict& v) { return v.holds; });
}

SuiteReport axiom_suite_check(const Matroid& m, Suite suite,
                              msol::EvalOptions options) {
  options.trace = true;
  SuiteReport report{suite, {}};
  const auto& library = SentenceLibrary::instance();
  for (const auto& name : suite_sentences(suite)) {
    msol::EvalResult res;
    try {
      res = msol::evaluate_full(m, *library.get(name).formula, {}, options);
    } catch (const ResourceError& e) {
      throw ResourceError(name + ": " + e.what());
    }
    report.verdicts.push_back({name, res.value, std::move(res.trace)});
  }
  return report;
}

}  // namespace mlogic
