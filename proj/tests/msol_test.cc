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

#include <cstdlib>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mlogic/catalog.h"
#include "mlogic/errors.h"
#include "mlogic/kinser.h"
#include "mlogic/msol/ast.h"
#include "mlogic/msol/evaluator.h"
#include "mlogic/msol/parser.h"
#include "mlogic/msol/transform.h"
#include "msol_fixtures.h"
#include "test_matroids.h"

namespace mlogic::msol {
namespace {

const char kR1[] = "forall X1 (r(X1) <= card(X1))";
const char kR3[] =
    "forall X1 forall X2 ((r(X1 union X2) + r(X1 inter X2)) <= (r(X1) + r(X2)))";
const char kPaving[] =
    "forall X1 ((card(X1) < r(E)) -> (r(X1) = card(X1)))";

FormulaPtr P(const std::string& text) { return parse_formula(text); }

std::string parse_error(const std::string& text, const ParseOptions& o = {}) {
  try {
    parse_formula(text, o);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::vector<std::string> sample_texts() {
  return {
      kR1,
      kR3,
      kPaving,
      "forall X1 forall X2 ((X1 subseteq X2) -> (r(X1) <= r(X2)))",
      "exists X1 ((r(X1) = card(X1)) and (r(X1) = r(E)))",
      "forall X1 forall X2 exists x1 ((((r(X1) = card(X1)) and "
      "(r(X2) = card(X2))) and (card(X1) < card(X2))) -> (((x1 notin X1) and "
      "(x1 in X2)) and (r(X1 union sing(x1)) = card(X1 union sing(x1)))))",
      "exists x1 exists x2 (not (x1 = x2))",
      "forall x1 ((x1 in comp(X1)) or (sing(x1) subseteq (X1 minus X2)))",
      "(X1 nsubseteq E) or (card(empty) = ((1 + 2) + r(X2)))",
      "not not (x1 in E)",
  };
}

TEST(MsolParseTest, RankAxiomShape) {
  FormulaPtr f = P(kR1);
  ASSERT_EQ(f->kind(), FormulaKind::kForall);
  EXPECT_EQ(f->variable(), Var::set(1));
  const Formula& atom = *f->body();
  ASSERT_EQ(atom.kind(), FormulaKind::kIntLe);
  EXPECT_EQ(atom.lhs()->kind(), TermKind::kRank);
  EXPECT_EQ(atom.rhs()->kind(), TermKind::kCardinality);
  EXPECT_TRUE(f->is_sentence());
  EXPECT_TRUE(equal(*f, *Formula::forall(
                            Var::set(1),
                            Formula::less_equal(Term::rank(Term::set(1)),
                                                Term::cardinality(Term::set(1))))));
}

TEST(MsolParseTest, PavingSentenceDesugars) {
  FormulaPtr f = P(kPaving);
  // forall X1 (not ((card <= r) and not (card = r)) or (r = card))
  ASSERT_EQ(f->kind(), FormulaKind::kForall);
  const Formula& body = *f->body();
  ASSERT_EQ(body.kind(), FormulaKind::kOr);
  const Formula& guard = *body.children()[0];
  ASSERT_EQ(guard.kind(), FormulaKind::kNot);
  ASSERT_EQ(guard.body()->kind(), FormulaKind::kAnd);
  EXPECT_EQ(guard.body()->children()[0]->kind(), FormulaKind::kIntLe);
  EXPECT_EQ(guard.body()->children()[1]->kind(), FormulaKind::kNot);
  EXPECT_EQ(body.children()[1]->kind(), FormulaKind::kIntEq);
}

TEST(MsolParseTest, AbbreviationsExpand) {
  EXPECT_TRUE(equal(*P("x1 notin X1"), *P("not (x1 in X1)")));
  EXPECT_TRUE(equal(*P("X1 nsubseteq X2"), *P("not (X1 subseteq X2)")));
  EXPECT_TRUE(equal(*P("(X1 minus X2) = empty"), *P("(X1 inter comp(X2)) = empty")));
  EXPECT_TRUE(equal(*P("(x1 in X1) -> (x1 in X2)"),
                    *P("(not (x1 in X1)) or (x1 in X2)")));
  EXPECT_TRUE(equal(*P("card(X1) < 2"),
                    *P("(card(X1) <= 2) and (not (card(X1) = 2))")));
}

TEST(MsolParseTest, CommentsAndWhitespace) {
  EXPECT_TRUE(equal(*P("# R1\nforall X1\n  (r(X1) <= card(X1))  # done\n"), *P(kR1)));
}

TEST(MsolParseTest, Rule5ViolationNamesVariable) {
  std::string msg = parse_error("(X1 = X2) and (exists X1 (card(X1) = 1))");
  EXPECT_NE(msg.find("X1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("rename"), std::string::npos) << msg;
}

TEST(MsolParseTest, RenameFixesRule5) {
  ParseOptions lax;
  lax.check_rule5 = false;
  FormulaPtr f = parse_formula("(X1 = X2) and (exists X1 (card(X1) = 1))", lax);
  ASSERT_TRUE(rule5_violation(*f).has_value());
  FormulaPtr g = rename_bound_conflicts(f);
  EXPECT_FALSE(rule5_violation(*g).has_value());
  EXPECT_EQ(to_text(*g), "(X1 = X2) and (exists X3 (card(X3) = 1))");
  EXPECT_EQ(g->free(), f->free());
  // Renaming preserves meaning.
  Matroid m = uniform_matroid(2, 3);
  for_each_interpretation(f->free(), m.size(), [&](const Interpretation& i) {
    EXPECT_EQ(evaluate(m, *f, i), evaluate(m, *g, i));
  });
}

TEST(MsolParseTest, RejectsQuantifyingNonFreeVariable) {
  EXPECT_NE(parse_error("forall X2 (r(X1) <= card(X1))").find("X2"),
            std::string::npos);
  EXPECT_NE(parse_error("exists X1 exists X1 (X1 = E)"), "");
}

TEST(MsolParseTest, ErrorsCarryPosition) {
  try {
    parse_formula("forall X1\n  (r(X1) <= card(X1)) and");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
    EXPECT_EQ(std::string(e.what()).rfind("2:", 0), 0u) << e.what();
  }
  EXPECT_NE(parse_error("x1 = "), "");
  EXPECT_NE(parse_error("X1 = x1"), "");           // sort mismatch
  EXPECT_NE(parse_error("card(x1) = 1"), "");      // card of an element
  EXPECT_NE(parse_error("x1 in X1 and x1 in X2"), "");  // unparenthesized
  EXPECT_NE(parse_error("(x1 in X1) and (x1 in X2) or (x1 in E)"), "");
  EXPECT_NE(parse_error("(x1 in X1) -> (x1 in X2) -> (x1 in E)"), "");
  EXPECT_NE(parse_error("X1 union X2 inter X1 = E"), "");
  EXPECT_NE(parse_error("y1 = y1"), "");
  EXPECT_NE(parse_error("(X1 = E"), "");
}

TEST(MsolParseTest, SameOperatorChainsAssociateLeft) {
  EXPECT_TRUE(equal(*P("(x1 in X1) and (x1 in X2) and (x1 in E)"),
                    *P("((x1 in X1) and (x1 in X2)) and (x1 in E)")));
  EXPECT_TRUE(equal(*P("card(X1) = 1 + 2 + 3"), *P("card(X1) = ((1 + 2) + 3)")));
}

TEST(MsolParseTest, PrintParseRoundTrip) {
  for (const auto& text : sample_texts()) {
    FormulaPtr f = P(text);
    std::string printed = to_text(*f);
    FormulaPtr g = P(printed);
    EXPECT_TRUE(equal(*f, *g)) << text << "\n" << printed;
    EXPECT_EQ(to_text(*g), printed);
  }
  FormulaGenerator gen(7);
  for (int k = 0; k < 200; ++k) {
    FormulaPtr f = gen.formula(4);
    EXPECT_TRUE(equal(*f, *P(to_text(*f)))) << to_text(*f);
  }
}

TEST(MsolAstTest, FreeAndBoundVariables) {
  FormulaPtr f = P("forall x1 ((x1 in X1) or (exists X2 (x2 in X2)))");
  EXPECT_EQ(f->free(), (VarSet{Var::set(1), Var::element(2)}));
  EXPECT_EQ(f->vars(), (VarSet{Var::set(1), Var::set(2), Var::element(1),
                               Var::element(2)}));
  EXPECT_EQ(count_quantifiers(*f), 2u);
  EXPECT_EQ(max_index(*f, Sort::kSet), 2);
}

TEST(MsolAstTest, ConstructorsEnforceSorts) {
  EXPECT_THROW(Term::union_of(Term::set(1), Term::element(1)), ValidationError);
  EXPECT_THROW(Formula::member(Term::set(1), Term::set(2)), ValidationError);
  EXPECT_THROW(Formula::forall(Var::set(3), P("X1 = E")), ValidationError);
}

TEST(MsolPrenexTest, NegatedExistentialFlips) {
  PrenexForm p = prenex(P("not (exists X1 (X1 = E))"));
  ASSERT_EQ(p.prefix.size(), 1u);
  EXPECT_EQ(p.prefix[0], (PrefixEntry{Quantifier::kForall, Var::set(1)}));
  EXPECT_TRUE(equal(*p.matrix, *P("not (X1 = E)")));
}

TEST(MsolPrenexTest, AlreadyPrenexUnchanged) {
  FormulaPtr f = P(kR3);
  PrenexForm p = prenex(f);
  EXPECT_EQ(p.prefix_text(), "forall X1 forall X2");
  EXPECT_TRUE(equal(*p.to_formula(), *f));
  EXPECT_TRUE(equal(*p.matrix, *f->body()->body()));
}

TEST(MsolPrenexTest, PullsQuantifierOutOfConjunction) {
  PrenexForm p = prenex(P("(X1 = E) and (forall x1 (x1 in X1))"));
  ASSERT_EQ(p.prefix.size(), 1u);
  EXPECT_EQ(p.prefix[0], (PrefixEntry{Quantifier::kForall, Var::element(1)}));
  EXPECT_TRUE(equal(*p.matrix, *P("(X1 = E) and (x1 in X1)")));
}

TEST(MsolPrenexTest, RenamesRepeatedBoundVariables) {
  FormulaPtr f = P("(exists X1 (X1 = E)) and (forall X1 (r(X1) <= 1))");
  PrenexForm p = prenex(f);
  ASSERT_EQ(p.prefix.size(), 2u);
  EXPECT_NE(p.prefix[0].var, p.prefix[1].var);
  EXPECT_EQ(p.prefix_text(), "exists X1 forall X2");
  for (const Matroid& m : testing_corpus()) {
    EXPECT_EQ(evaluate(m, *f), evaluate(m, *p.to_formula()));
  }
}

TEST(MsolPrenexTest, EquivalentOnRandomCorpus) {
  FormulaGenerator gen(11);
  auto corpus = testing_corpus();
  for (int k = 0; k < 60; ++k) {
    FormulaPtr f = gen.formula(3);
    PrenexForm p = prenex(f);
    FormulaPtr g = p.to_formula();
    EXPECT_EQ(count_quantifiers(*p.matrix), 0u);
    EXPECT_EQ(g->free(), f->free());
    for (const Matroid& m : corpus) {
      if (m.size() > 5) continue;
      for_each_interpretation(f->free(), m.size(), [&](const Interpretation& i) {
        ASSERT_EQ(evaluate(m, *f, i), evaluate(m, *g, i)) << to_text(*f);
      });
    }
  }
}

TEST(MsolElementwiseTest, ExistentialElementBecomesSet) {
  PrenexForm p = prenex(P("exists x1 exists X1 (x1 in X1)"));
  PrenexForm q = elementwise_to_set(p);
  EXPECT_EQ(q.prefix_text(), "exists X2 exists X1 forall x1");
  EXPECT_TRUE(equal(
      *q.matrix,
      *P("(card(X2) = 1) and ((X2 = sing(x1)) -> (x1 in X1))")));
  for (const Matroid& m : testing_corpus()) {
    EXPECT_EQ(evaluate(m, *p.to_formula()), evaluate(m, *q.to_formula()));
  }
}

TEST(MsolElementwiseTest, NoElementQuantifiersUnchanged) {
  PrenexForm p = prenex(P(kR3));
  PrenexForm q = elementwise_to_set(p);
  EXPECT_EQ(q.prefix, p.prefix);
  EXPECT_TRUE(equal(*q.matrix, *p.matrix));
  // Trailing element quantifiers are already in place.
  PrenexForm b = prenex(P("forall X1 exists x1 (x1 in X1)"));
  EXPECT_EQ(elementwise_to_set(b).prefix, b.prefix);
}

TEST(MsolElementwiseTest, UniversalThenExistentialOnU24) {
  FormulaPtr f = P("forall x1 exists X2 ((x1 in X2) and (r(X2) = card(X1)))");
  PrenexForm q = elementwise_to_set(prenex(f));
  EXPECT_EQ(q.prefix_text(), "forall X3 exists X2 forall x1");
  Matroid m = uniform_matroid(2, 4);
  FormulaPtr g = q.to_formula();
  for_each_interpretation(f->free(), m.size(), [&](const Interpretation& i) {
    EXPECT_EQ(evaluate(m, *f, i), evaluate(m, *g, i));
  });
}

TEST(MsolElementwiseTest, EquivalentOnRandomSentences) {
  FormulaGenerator gen(23);
  Matroid u24 = uniform_matroid(2, 4);
  Matroid k4 = k4_matroid();
  for (int k = 0; k < 40; ++k) {
    FormulaPtr f = gen.sentence(3);
    FormulaPtr g = elementwise_to_set(prenex(f)).to_formula();
    EXPECT_EQ(evaluate(u24, *f), evaluate(u24, *g)) << to_text(*f);
    EXPECT_EQ(evaluate(k4, *f), evaluate(k4, *g)) << to_text(*f);
  }
}

TEST(MsolClassifyTest, Examples) {
  auto r2 = classify_mlogic(
      P("forall X1 forall X2 ((X1 subseteq X2) -> (r(X1) <= r(X2)))"));
  EXPECT_TRUE(r2.mlogic);
  EXPECT_EQ(r2.summary, "MLogic (sets: forall; elements: none)");

  auto b2 = classify_mlogic(
      P("forall X1 forall X2 forall X3 exists x1 (((card(X3) = 1) and "
        "(X3 subseteq X1)) -> (x1 in X2))"));
  EXPECT_TRUE(b2.mlogic);
  EXPECT_EQ(b2.summary, "MLogic (sets: forall; elements: exists)");

  auto mixed = classify_mlogic(P("exists X1 forall X2 (X1 subseteq X2)"));
  EXPECT_FALSE(mixed.mlogic);
  EXPECT_EQ(mixed.summary, "NotNormalizable (sets: exists,forall; elements: none)");

  // The element quantifier moves behind the set block.
  auto moved = classify_mlogic(P("forall x1 forall X1 (x1 in X1)"));
  EXPECT_TRUE(moved.mlogic);
  EXPECT_EQ(moved.normal_form.prefix_text(), "forall X2 forall X1 forall x1");
}

TEST(MsolEvalTest, SpecExamples) {
  EXPECT_TRUE(evaluate(uniform_matroid(2, 4), *P(kR3)));
  EXPECT_FALSE(evaluate(corrupted_matroid(), *P(kR3)));
  EXPECT_TRUE(evaluate(kinser_matroid(4).matroid, *P(kPaving)));
  // A parallel pair in rank 2 is still paving; a loop is not.
  EXPECT_TRUE(evaluate(sum_of(uniform_matroid(1, 2), uniform_matroid(1, 2)),
                       *P(kPaving)));
  EXPECT_FALSE(evaluate(sum_of(uniform_matroid(2, 4), uniform_matroid(0, 1)),
                        *P(kPaving)));
}

TEST(MsolEvalTest, CounterexampleTrace) {
  Matroid bad = corrupted_matroid();
  EvalOptions o;
  o.trace = true;
  EvalResult res = evaluate_full(bad, *P(kR3), {}, o);
  EXPECT_FALSE(res.value);
  ASSERT_EQ(res.trace.size(), 2u);
  EXPECT_EQ(format_trace_entry(bad.ground(), res.trace[0]), "X1 = {a}");
  EXPECT_EQ(format_trace_entry(bad.ground(), res.trace[1]), "X2 = {b}");
}

TEST(MsolEvalTest, WitnessTrace) {
  Matroid m = uniform_matroid(2, 4);
  EvalOptions o;
  o.trace = true;
  EvalResult res = evaluate_full(
      m, *P("exists X1 exists x1 ((r(X1) = 2) and (x1 notin X1))"), {}, o);
  EXPECT_TRUE(res.value);
  ASSERT_EQ(res.trace.size(), 2u);
  EXPECT_EQ(format_trace_entry(m.ground(), res.trace[0]), "X1 = {a, b}");
  EXPECT_EQ(format_trace_entry(m.ground(), res.trace[1]), "x1 = c");
  // A true universal or false existential has nothing to show.
  EXPECT_TRUE(evaluate_full(m, *P(kR1), {}, o).trace.empty());
}

TEST(MsolEvalTest, JobsDoNotChangeResults) {
  FormulaGenerator gen(31);
  Matroid m = k4_matroid();
  for (int k = 0; k < 30; ++k) {
    FormulaPtr f = gen.sentence(3);
    EvalOptions one, many;
    one.trace = many.trace = true;
    many.jobs = 3;
    EvalResult a = evaluate_full(m, *f, {}, one);
    EvalResult b = evaluate_full(m, *f, {}, many);
    EXPECT_EQ(a.value, b.value) << to_text(*f);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t j = 0; j < a.trace.size(); ++j) {
      EXPECT_EQ(format_trace_entry(m.ground(), a.trace[j]),
                format_trace_entry(m.ground(), b.trace[j]));
    }
  }
}

TEST(MsolEvalTest, BudgetRefusesHugeGroundSets) {
  Matroid kin = kinser_matroid(19).matroid;
  ASSERT_EQ(kin.size(), 308u);
  try {
    evaluate(kin, *P(kR3));
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("X1"), std::string::npos) << e.what();
  }
  EXPECT_DOUBLE_EQ(branch_cost_log2(*P(kR3), 308), 616.0);
  EXPECT_DOUBLE_EQ(branch_cost_log2(*P("forall X1 exists x1 (x1 in X1)"), 8), 11.0);

  EvalOptions tight;
  tight.budget_log2 = 4;
  EXPECT_THROW(evaluate(uniform_matroid(2, 5), *P(kR1), {}, tight), ResourceError);
  tight.force = true;
  EXPECT_TRUE(evaluate(uniform_matroid(2, 5), *P(kR1), {}, tight));
}

TEST(MsolEvalTest, BudgetFromEnvironment) {
  ::setenv("MLOGIC_BUDGET_LOG2", "3", 1);
  EXPECT_DOUBLE_EQ(default_budget_log2(), 3.0);
  EXPECT_THROW(evaluate(uniform_matroid(2, 4), *P(kR1)), ResourceError);
  ::unsetenv("MLOGIC_BUDGET_LOG2");
  EXPECT_DOUBLE_EQ(default_budget_log2(), 34.0);
  EXPECT_TRUE(evaluate(uniform_matroid(2, 4), *P(kR1)));
}

TEST(MsolEvalTest, InterpretationMustMatchFreeVariables) {
  Matroid m = uniform_matroid(1, 3);
  FormulaPtr f = P("x1 in X1");
  Interpretation i;
  i.assign_set(1, Subset::from_indices(3, {0}));
  EXPECT_THROW(evaluate(m, *f, i), DomainError);
  i.assign_element(1, 0);
  EXPECT_TRUE(evaluate(m, *f, i));
  i.assign_element(2, 1);
  EXPECT_THROW(evaluate(m, *f, i), DomainError);
  EvalOptions o;
  o.allow_extra_assignments = true;
  EXPECT_TRUE(evaluate(m, *f, i, o));
  Interpretation out_of_range;
  out_of_range.assign_set(1, Subset(3));
  out_of_range.assign_element(1, 7);
  EXPECT_THROW(evaluate(m, *f, out_of_range), DomainError);
}

TEST(MsolEvalTest, AgreesWithReferenceEvaluator) {
  FormulaGenerator gen(41);
  auto corpus = testing_corpus();
  for (int k = 0; k < 40; ++k) {
    FormulaPtr f = gen.formula(3);
    for (std::size_t j = 0; j < corpus.size(); j += 3) {
      const Matroid& m = corpus[j];
      ReferenceEvaluator ref(m);
      for_each_interpretation(f->free(), m.size(), [&](const Interpretation& i) {
        ASSERT_EQ(evaluate(m, *f, i), ref.eval(*f, i)) << to_text(*f);
      });
    }
  }
  Matroid u24 = uniform_matroid(2, 4);
  ReferenceEvaluator ref(u24);
  for (const auto& text : sample_texts()) {
    FormulaPtr f = P(text);
    for_each_interpretation(f->free(), 4, [&](const Interpretation& i) {
      EXPECT_EQ(evaluate(u24, *f, i), ref.eval(*f, i)) << text;
    });
  }
}

TEST(MsolEvalTest, SentenceOrItsNegation) {
  FormulaGenerator gen(53);
  auto corpus = testing_corpus();
  for (int k = 0; k < 40; ++k) {
    FormulaPtr s = gen.sentence(3);
    FormulaPtr ns = Formula::negation(s);
    for (const Matroid& m : corpus) {
      EXPECT_NE(evaluate(m, *s), evaluate(m, *ns)) << to_text(*s);
    }
  }
}

TEST(MsolEvalTest, DeMorganAndDoubleNegation) {
  FormulaGenerator gen(67);
  auto corpus = testing_corpus();
  for (int k = 0; k < 40; ++k) {
    FormulaPtr a = gen.sentence(2);
    FormulaPtr b = gen.sentence(2);
    FormulaPtr lhs = Formula::negation(Formula::conjunction(a, b));
    FormulaPtr rhs =
        Formula::disjunction(Formula::negation(a), Formula::negation(b));
    FormulaPtr lhs2 = Formula::negation(Formula::disjunction(a, b));
    FormulaPtr rhs2 =
        Formula::conjunction(Formula::negation(a), Formula::negation(b));
    FormulaPtr nn = Formula::negation(Formula::negation(a));
    for (const Matroid& m : corpus) {
      if (m.size() > 4) continue;
      EXPECT_EQ(evaluate(m, *lhs), evaluate(m, *rhs));
      EXPECT_EQ(evaluate(m, *lhs2), evaluate(m, *rhs2));
      EXPECT_EQ(evaluate(m, *nn), evaluate(m, *a));
    }
  }
}

TEST(MsolEvalTest, OracleWithoutTableMatchesMaterialized) {
  // Twenty-four elements is above the materialization limit, so ranks go
  // straight to the oracle.
  Matroid big = uniform_matroid(3, 24);
  FormulaPtr f = P("exists X1 ((card(X1) = 4) and (r(X1) = 3))");
  EXPECT_TRUE(evaluate(big, *f));
  EXPECT_FALSE(evaluate(big, *P("exists x1 (r(sing(x1)) = 0)")));
}

}  // namespace
}  // namespace mlogic::msol
