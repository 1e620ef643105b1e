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

#include "mlogic/msol/parser.h"

#include <cctype>
#include <charconv>
#include <unordered_map>
#include <vector>

#include "mlogic/errors.h"

namespace mlogic::msol {
namespace {

enum class Tok {
  kEnd,
  kLParen,
  kRParen,
  kEq,
  kLe,
  kLt,
  kPlus,
  kArrow,
  kInt,
  kSetVar,
  kElemVar,
  kForall,
  kExists,
  kAnd,
  kOr,
  kNot,
  kIn,
  kNotIn,
  kSubseteq,
  kNSubseteq,
  kUnion,
  kInter,
  kMinus,
  kComp,
  kCard,
  kRank,
  kGround,
  kEmpty,
  kSing,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  std::int64_t value = 0;  // integer literal or variable index
};

const std::unordered_map<std::string_view, Tok>& keywords() {
  static const auto* table = new std::unordered_map<std::string_view, Tok>{
      {"forall", Tok::kForall},     {"exists", Tok::kExists},
      {"and", Tok::kAnd},           {"or", Tok::kOr},
      {"not", Tok::kNot},           {"in", Tok::kIn},
      {"notin", Tok::kNotIn},       {"subseteq", Tok::kSubseteq},
      {"nsubseteq", Tok::kNSubseteq}, {"union", Tok::kUnion},
      {"inter", Tok::kInter},       {"minus", Tok::kMinus},
      {"comp", Tok::kComp},         {"card", Tok::kCard},
      {"r", Tok::kRank},            {"E", Tok::kGround},
      {"empty", Tok::kEmpty},       {"sing", Tok::kSing},
  };
  return *table;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto parse_number = [&](std::string_view digits) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || p != digits.data() + digits.size()) {
      throw ParseError("number '" + std::string(digits) + "' out of range", line,
                       col);
    }
    return v;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::kEnd, std::string(1, c), line, col};
    if (c == '(' || c == ')' || c == '=' || c == '+') {
      t.kind = c == '(' ? Tok::kLParen
               : c == ')' ? Tok::kRParen
               : c == '=' ? Tok::kEq
                          : Tok::kPlus;
      advance(1);
    } else if (c == '<') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        t.kind = Tok::kLe;
        t.text = "<=";
        advance(2);
      } else {
        t.kind = Tok::kLt;
        advance(1);
      }
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Tok::kArrow;
      t.text = "->";
      advance(2);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::kInt;
      t.text = std::string(text.substr(i, j - i));
      t.value = parse_number(t.text);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string_view word = text.substr(i, j - i);
      t.text = std::string(word);
      auto kw = keywords().find(word);
      bool var_shape = word.size() > 1 && (word[0] == 'X' || word[0] == 'x');
      for (std::size_t k = 1; var_shape && k < word.size(); ++k) {
        var_shape = std::isdigit(static_cast<unsigned char>(word[k]));
      }
      if (kw != keywords().end()) {
        t.kind = kw->second;
      } else if (var_shape) {
        t.kind = word[0] == 'X' ? Tok::kSetVar : Tok::kElemVar;
        t.value = parse_number(word.substr(1));
      } else {
        throw ParseError("unknown word '" + t.text + "'", line, col);
      }
      advance(j - i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::kEnd, "end of input", line, col});
  return out;
}

bool is_binop(Tok t) { return t == Tok::kAnd || t == Tok::kOr || t == Tok::kArrow; }
bool is_term_op(Tok t) {
  return t == Tok::kUnion || t == Tok::kInter || t == Tok::kMinus ||
         t == Tok::kPlus;
}

bool later(const ParseError& a, const ParseError& b) {
  return a.line() != b.line() ? a.line() > b.line() : a.column() > b.column();
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : toks_(std::move(tokens)), options_(options) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    if (peek().kind != Tok::kEnd) fail(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + what + ", found '" + peek().text + "'");
    }
    return take();
  }

  // Runs a factory, reporting sort and binding errors at token `at`.
  template <typename F>
  auto build(const Token& at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ValidationError& e) {
      fail(at, e.what());
    }
  }

  FormulaPtr formula() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNot: {
        take();
        FormulaPtr body = formula();
        return Formula::negation(std::move(body));
      }
      case Tok::kForall:
      case Tok::kExists: {
        const Token& q = take();
        const Token& v = peek();
        if (v.kind != Tok::kSetVar && v.kind != Tok::kElemVar) {
          fail(v, "expected a variable after '" + q.text + "', found '" + v.text + "'");
        }
        take();
        Var var{v.kind == Tok::kSetVar ? Sort::kSet : Sort::kElement,
                static_cast<int>(v.value)};
        FormulaPtr body = formula();
        FormulaKind kind =
            q.kind == Tok::kForall ? FormulaKind::kForall : FormulaKind::kExists;
        return build(q, [&] { return Formula::quantifier(kind, var, body); });
      }
      case Tok::kLParen: {
        std::size_t start = pos_;
        try {
          return group();
        } catch (const ParseError& as_group) {
          pos_ = start;
          try {
            return atom();
          } catch (const ParseError& as_atom) {
            if (later(as_group, as_atom)) throw as_group;
            throw;
          }
        }
      }
      default:
        return atom();
    }
  }

  FormulaPtr group() {
    expect(Tok::kLParen, "'('");
    FormulaPtr acc = formula();
    expect(Tok::kRParen, "')'");
    std::optional<Tok> chain;
    while (is_binop(peek().kind)) {
      const Token& op = take();
      if (chain && *chain == Tok::kArrow) {
        fail(op, "'->' does not chain; add parentheses");
      }
      if (chain && *chain != op.kind) {
        fail(op, "mixing '" + std::string(*chain == Tok::kAnd ? "and" : "or") +
                     "' and '" + op.text + "' needs parentheses");
      }
      chain = op.kind;
      expect(Tok::kLParen, "'(' after a binary connective");
      FormulaPtr rhs = formula();
      expect(Tok::kRParen, "')'");
      if (op.kind == Tok::kArrow) {
        acc = Formula::implies(acc, rhs);
      } else if (op.kind == Tok::kAnd) {
        acc = Formula::conjunction(acc, rhs);
      } else {
        acc = Formula::disjunction(acc, rhs);
      }
      if (options_.check_rule5) check_operands(op, *acc);
    }
    return acc;
  }

  void check_operands(const Token& op, const Formula& f) {
    const Formula& p = *f.children()[0];
    const Formula& q = *f.children()[1];
    for (const auto* pair : {&p, &q}) {
      const Formula& a = *pair;
      const Formula& b = pair == &p ? q : p;
      for (const Var& v : a.free()) {
        if (b.vars().count(v) && !b.free().count(v)) {
          fail(op, "variable " + v.name() +
                       " is free in one operand of '" + op.text +
                       "' and bound in the other (see the rename command)");
        }
      }
    }
  }

  FormulaPtr atom() {
    TermPtr a = term();
    const Token& rel = peek();
    auto rhs = [&] {
      take();
      return term();
    };
    FormulaPtr f;
    switch (rel.kind) {
      case Tok::kEq: {
        TermPtr b = rhs();
        f = build(rel, [&] { return Formula::equals(a, b); });
        break;
      }
      case Tok::kLe: {
        TermPtr b = rhs();
        f = build(rel, [&] { return Formula::less_equal(a, b); });
        break;
      }
      case Tok::kLt: {
        TermPtr b = rhs();
        f = build(rel, [&] { return Formula::less(a, b); });
        break;
      }
      case Tok::kSubseteq: {
        TermPtr b = rhs();
        f = build(rel, [&] { return Formula::subseteq(a, b); });
        break;
      }
      case Tok::kNSubseteq: {
        TermPtr b = rhs();
        f = build(rel, [&] { return Formula::negation(Formula::subseteq(a, b)); });
        break;
      }
      case Tok::kIn: {
        TermPtr b = rhs();
        f = build(rel, [&] { return Formula::member(a, b); });
        break;
      }
      case Tok::kNotIn: {
        TermPtr b = rhs();
        f = build(rel, [&] { return Formula::negation(Formula::member(a, b)); });
        break;
      }
      default:
        fail(rel, "expected a relation (=, <=, <, subseteq, nsubseteq, in, "
                  "notin), found '" + rel.text + "'");
    }
    if (is_binop(peek().kind)) {
      fail(peek(), "operands of '" + peek().text + "' must be parenthesized");
    }
    return f;
  }

  TermPtr term() {
    TermPtr acc = primary();
    std::optional<Tok> chain;
    while (is_term_op(peek().kind)) {
      const Token& op = take();
      if (chain && *chain != op.kind) {
        fail(op, "mixing different operators needs parentheses before '" +
                     op.text + "'");
      }
      chain = op.kind;
      TermPtr rhs = primary();
      acc = build(op, [&] {
        switch (op.kind) {
          case Tok::kUnion:
            return Term::union_of(acc, rhs);
          case Tok::kInter:
            return Term::intersection(acc, rhs);
          case Tok::kMinus:
            return Term::intersection(acc, Term::complement(rhs));
          default:
            return Term::sum(acc, rhs);
        }
      });
    }
    return acc;
  }

  TermPtr primary() {
    const Token& t = take();
    auto unary = [&](auto factory) {
      expect(Tok::kLParen, "'('");
      TermPtr inner = term();
      expect(Tok::kRParen, "')'");
      return build(t, [&] { return factory(inner); });
    };
    switch (t.kind) {
      case Tok::kSetVar:
        return Term::set(static_cast<int>(t.value));
      case Tok::kElemVar:
        return Term::element(static_cast<int>(t.value));
      case Tok::kGround:
        return Term::ground();
      case Tok::kEmpty:
        return Term::empty();
      case Tok::kInt:
        return Term::constant(t.value);
      case Tok::kSing:
        return unary(&Term::singleton);
      case Tok::kComp:
        return unary(&Term::complement);
      case Tok::kCard:
        return unary(&Term::cardinality);
      case Tok::kRank:
        return unary(&Term::rank);
      case Tok::kLParen: {
        TermPtr inner = term();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        fail(t, "expected a term, found '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

bool is_compound(const Term& t) {
  return t.kind() == TermKind::kUnion || t.kind() == TermKind::kIntersection ||
         t.kind() == TermKind::kSum;
}

std::string operand(const Term& t) {
  return is_compound(t) ? "(" + to_text(t) + ")" : to_text(t);
}

// Bodies of 'not' and quantifiers: parenthesized unless they start with a
// keyword themselves.
std::string body_text(const Formula& b) {
  bool bare = b.kind() == FormulaKind::kNot || b.is_quantifier();
  return bare ? to_text(b) : "(" + to_text(b) + ")";
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, const ParseOptions& options) {
  return Parser(lex(text), options).parse();
}

std::string to_text(const Term& t) {
  const auto& c = t.children();
  switch (t.kind()) {
    case TermKind::kElementVar:
    case TermKind::kSetVar:
      return t.variable().name();
    case TermKind::kGround:
      return "E";
    case TermKind::kEmpty:
      return "empty";
    case TermKind::kSingleton:
      return "sing(" + to_text(*c[0]) + ")";
    case TermKind::kComplement:
      return "comp(" + to_text(*c[0]) + ")";
    case TermKind::kCardinality:
      return "card(" + to_text(*c[0]) + ")";
    case TermKind::kRank:
      return "r(" + to_text(*c[0]) + ")";
    case TermKind::kConstant:
      return std::to_string(t.value());
    case TermKind::kUnion:
      return operand(*c[0]) + " union " + operand(*c[1]);
    case TermKind::kIntersection:
      return operand(*c[0]) + " inter " + operand(*c[1]);
    case TermKind::kSum:
      return operand(*c[0]) + " + " + operand(*c[1]);
  }
  return "?";
}

std::string to_text(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kElementEq:
    case FormulaKind::kSetEq:
    case FormulaKind::kIntEq:
      return to_text(*f.lhs()) + " = " + to_text(*f.rhs());
    case FormulaKind::kSubset:
      return to_text(*f.lhs()) + " subseteq " + to_text(*f.rhs());
    case FormulaKind::kIntLe:
      return to_text(*f.lhs()) + " <= " + to_text(*f.rhs());
    case FormulaKind::kMember:
      return to_text(*f.lhs()) + " in " + to_text(*f.rhs());
    case FormulaKind::kNot:
      return "not " + body_text(*f.body());
    case FormulaKind::kOr:
    case FormulaKind::kAnd:
      return "(" + to_text(*f.children()[0]) + ") " +
             (f.kind() == FormulaKind::kOr ? "or" : "and") + " (" +
             to_text(*f.children()[1]) + ")";
    case FormulaKind::kExists:
      return "exists " + f.variable().name() + " " + body_text(*f.body());
    case FormulaKind::kForall:
      return "forall " + f.variable().name() + " " + body_text(*f.body());
  }
  return "?";
}

}  // namespace mlogic::msol
