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

// Concrete syntax.
//
//   formula  := 'not' formula
//             | ('forall' | 'exists') VAR formula
//             | '(' formula ')' { BINOP '(' formula ')' }
//             | atom
//   BINOP    := 'and' | 'or' | '->'
//   atom     := term REL term
//   REL      := '=' | '<=' | '<' | 'subseteq' | 'nsubseteq' | 'in' | 'notin'
//   term     := primary { OP primary }
//   OP       := 'union' | 'inter' | 'minus' | '+'
//   primary  := VAR | 'E' | 'empty' | INT | '(' term ')'
//             | ('sing' | 'comp' | 'card' | 'r') '(' term ')'
//   VAR      := 'X' DIGITS | 'x' DIGITS
//
// A chain of binary connectives or term operators must repeat one operator
// and associates to the left; '->' does not chain. Quantifier and 'not'
// bodies extend as far as possible. '#' starts a comment.
//
// '->', '<', 'minus', 'notin' and 'nsubseteq' are expanded while parsing,
// and the printer emits only the core forms, so print followed by parse
// reproduces the tree.

#ifndef MLOGIC_MSOL_PARSER_H_
#define MLOGIC_MSOL_PARSER_H_

#include <string>
#include <string_view>

#include "mlogic/msol/ast.h"

namespace mlogic::msol {

struct ParseOptions {
  // Reject formulas where a variable is free in one operand of 'and'/'or'
  // and bound in the other. Disabled only to feed rename_bound_conflicts.
  bool check_rule5 = true;
};

// Throws ParseError with the line and column of the offending token.
FormulaPtr parse_formula(std::string_view text, const ParseOptions& options = {});

std::string to_text(const Term& t);
std::string to_text(const Formula& f);

}  // namespace mlogic::msol

#endif  // MLOGIC_MSOL_PARSER_H_
