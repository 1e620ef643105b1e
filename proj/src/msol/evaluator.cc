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

#include "mlogic/msol/evaluator.h"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "mlogic/errors.h"
#include "mlogic/explicit.h"
#include "mlogic/oracles.h"

namespace mlogic::msol {
namespace {

// Rank tables are built only when the formula will ask for at least as
// many ranks as the table holds.
constexpr std::size_t kMaxTableElements = 22;
constexpr double kDefaultBudgetLog2 = 34.0;

bool uses_rank(const Term& t) {
  if (t.kind() == TermKind::kRank) return true;
  for (const auto& c : t.children()) {
    if (uses_rank(*c)) return true;
  }
  return false;
}

bool uses_rank(const Formula& f) {
  if (f.is_atomic()) return uses_rank(*f.lhs()) || uses_rank(*f.rhs());
  for (const auto& c : f.children()) {
    if (uses_rank(*c)) return true;
  }
  return false;
}

double branches_log2(const Var& v, std::size_t n) {
  if (v.sort == Sort::kSet) return static_cast<double>(n);
  return n == 0 ? 0.0 : std::log2(static_cast<double>(n));
}

void check_budget(const Formula& f, std::size_t n, double spent, double budget) {
  if (f.is_quantifier()) {
    spent += branches_log2(f.variable(), n);
    if (spent > budget) {
      std::ostringstream msg;
      msg.precision(4);
      msg << "evaluation budget exceeded at quantifier '"
          << (f.kind() == FormulaKind::kExists ? "exists " : "forall ")
          << f.variable().name() << "': about 2^" << spent
          << " branches against a budget of 2^" << budget
          << " (raise MLOGIC_BUDGET_LOG2 or pass --force)";
      throw ResourceError(msg.str());
    }
  }
  for (const auto& c : f.children()) check_budget(*c, n, spent, budget);
}

struct Env {
  std::vector<Subset> sets;
  std::vector<std::size_t> elems;
};

class Evaluator {
 public:
  Evaluator(const Matroid& m, bool materialize) : n_(m.size()) {
    if (auto t = std::dynamic_pointer_cast<const TableOracle>(m.oracle())) {
      table_owner_ = t;
    } else if (materialize) {
      table_owner_ = std::make_shared<TableOracle>(n_, rank_table(m.memoized()));
    } else {
      oracle_ = m.memoized().oracle();
    }
    if (table_owner_) table_ = table_owner_->table().data();
  }

  std::size_t size() const { return n_; }

  bool eval(const Formula& f, Env& env) const {
    switch (f.kind()) {
      case FormulaKind::kElementEq:
        return element(*f.lhs(), env) == element(*f.rhs(), env);
      case FormulaKind::kSetEq:
        return set(*f.lhs(), env) == set(*f.rhs(), env);
      case FormulaKind::kSubset:
        return set(*f.lhs(), env).is_subset_of(set(*f.rhs(), env));
      case FormulaKind::kIntEq:
        return integer(*f.lhs(), env) == integer(*f.rhs(), env);
      case FormulaKind::kIntLe:
        return integer(*f.lhs(), env) <= integer(*f.rhs(), env);
      case FormulaKind::kMember:
        return set(*f.rhs(), env).test(element(*f.lhs(), env));
      case FormulaKind::kNot:
        return !eval(*f.body(), env);
      case FormulaKind::kOr:
        return eval(*f.children()[0], env) || eval(*f.children()[1], env);
      case FormulaKind::kAnd:
        return eval(*f.children()[0], env) && eval(*f.children()[1], env);
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        const bool want = f.kind() == FormulaKind::kExists;
        const Var& v = f.variable();
        const std::uint64_t count = branch_count(v);
        bool found = false;
        with_binding(v, env, [&] {
          for (std::uint64_t k = 0; k < count && !found; ++k) {
            bind(v, k, env);
            if (eval(*f.body(), env) == want) found = true;
          }
        });
        return want ? found : !found;
      }
    }
    return false;
  }

  std::uint64_t branch_count(const Var& v) const {
    if (v.sort == Sort::kElement) return n_;
    if (n_ >= 63) {
      throw ResourceError("cannot enumerate the subsets of a " +
                          std::to_string(n_) + "-element ground set");
    }
    return std::uint64_t{1} << n_;
  }

  void bind(const Var& v, std::uint64_t k, Env& env) const {
    if (v.sort == Sort::kSet) {
      env.sets[v.index] = Subset::from_mask(n_, k);
    } else {
      env.elems[v.index] = static_cast<std::size_t>(k);
    }
  }

  // Restores the slot afterwards so sibling subformulas see the outer value.
  template <typename F>
  void with_binding(const Var& v, Env& env, F&& body) const {
    if (v.sort == Sort::kSet) {
      Subset saved = env.sets[v.index];
      body();
      env.sets[v.index] = std::move(saved);
    } else {
      std::size_t saved = env.elems[v.index];
      body();
      env.elems[v.index] = saved;
    }
  }

 private:
  std::size_t element(const Term& t, const Env& env) const {
    return env.elems[t.variable().index];
  }

  Subset set(const Term& t, const Env& env) const {
    const auto& c = t.children();
    switch (t.kind()) {
      case TermKind::kSetVar:
        return env.sets[t.variable().index];
      case TermKind::kGround:
        return Subset::full(n_);
      case TermKind::kEmpty:
        return Subset(n_);
      case TermKind::kSingleton: {
        Subset s(n_);
        s.set(element(*c[0], env));
        return s;
      }
      case TermKind::kComplement:
        return set(*c[0], env).complement();
      case TermKind::kUnion:
        return set(*c[0], env) | set(*c[1], env);
      case TermKind::kIntersection:
        return set(*c[0], env) & set(*c[1], env);
      default:
        throw Error("not a set term");
    }
  }

  std::int64_t integer(const Term& t, const Env& env) const {
    const auto& c = t.children();
    switch (t.kind()) {
      case TermKind::kConstant:
        return t.value();
      case TermKind::kCardinality:
        return static_cast<std::int64_t>(set(*c[0], env).count());
      case TermKind::kRank:
        return rank(set(*c[0], env));
      case TermKind::kSum:
        return integer(*c[0], env) + integer(*c[1], env);
      default:
        throw Error("not an integer term");
    }
  }

  int rank(const Subset& s) const {
    return table_ ? table_[s.to_mask()] : oracle_->rank(s);
  }

  std::size_t n_;
  std::shared_ptr<const TableOracle> table_owner_;
  const std::uint8_t* table_ = nullptr;
  OraclePtr oracle_;
};

// The outermost run of same-kind quantifiers and what follows it.
struct Block {
  bool exists = false;
  std::vector<Var> vars;
  const Formula* body = nullptr;
};

Block outer_block(const Formula& f) {
  Block b;
  b.body = &f;
  if (!f.is_quantifier()) return b;
  b.exists = f.kind() == FormulaKind::kExists;
  while (b.body->is_quantifier() &&
         (b.body->kind() == FormulaKind::kExists) == b.exists) {
    b.vars.push_back(b.body->variable());
    b.body = b.body->body().get();
  }
  return b;
}

// Enumerates the block from position k in lexicographic order; on a
// decisive assignment (∃ true / ∀ false) leaves it in `trail`.
bool run_block(const Evaluator& ev, const Block& b, std::size_t k, Env& env,
               std::vector<TraceEntry>& trail) {
  if (k == b.vars.size()) return ev.eval(*b.body, env);
  const Var& v = b.vars[k];
  const std::uint64_t count = ev.branch_count(v);
  bool decisive = false;
  ev.with_binding(v, env, [&] {
    for (std::uint64_t i = 0; i < count && !decisive; ++i) {
      ev.bind(v, i, env);
      TraceEntry e{v, v.sort == Sort::kSet ? env.sets[v.index] : Subset(),
                   v.sort == Sort::kElement ? env.elems[v.index] : 0};
      trail.push_back(std::move(e));
      if (run_block(ev, b, k + 1, env, trail) == b.exists) {
        decisive = true;
      } else {
        trail.pop_back();
      }
    }
  });
  return b.exists ? decisive : !decisive;
}

// Lowest decisive branch index of the block's first variable, or count.
std::uint64_t parallel_first_decisive(const Evaluator& ev, const Block& b,
                                      const Env& base, unsigned jobs) {
  const Var& v = b.vars[0];
  const std::uint64_t count = ev.branch_count(v);
  std::atomic<std::uint64_t> best{count};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      try {
        Env env = base;
        std::vector<TraceEntry> scratch;
        for (std::uint64_t i = t; i < count && i < best.load(); i += jobs) {
          ev.bind(v, i, env);
          scratch.clear();
          if (run_block(ev, b, 1, env, scratch) == b.exists) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  return best.load();
}

}  // namespace

VarSet Interpretation::domain() const {
  VarSet d;
  for (const auto& [i, s] : sets_) d.insert(Var::set(i));
  for (const auto& [i, e] : elements_) d.insert(Var::element(i));
  return d;
}

double default_budget_log2() {
  if (const char* env = std::getenv("MLOGIC_BUDGET_LOG2")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudgetLog2;
}

double branch_cost_log2(const Formula& f, std::size_t n) {
  double best = 0;
  for (const auto& c : f.children()) best = std::max(best, branch_cost_log2(*c, n));
  if (f.is_quantifier()) best += branches_log2(f.variable(), n);
  return best;
}

EvalResult evaluate_full(const Matroid& m, const Formula& f,
                         const Interpretation& interp,
                         const EvalOptions& options) {
  const std::size_t n = m.size();
  for (const Var& v : f.free()) {
    if (!interp.domain().count(v)) {
      throw DomainError("interpretation does not assign free variable " +
                        v.name());
    }
  }
  for (const Var& v : interp.domain()) {
    if (!options.allow_extra_assignments && !f.free().count(v)) {
      throw DomainError("interpretation assigns " + v.name() +
                        ", which is not free in the formula");
    }
  }
  for (const auto& [i, s] : interp.sets()) {
    if (s.universe_size() != n) {
      throw DomainError("X" + std::to_string(i) +
                        " is assigned a subset of a different ground set");
    }
  }
  for (const auto& [i, e] : interp.elements()) {
    if (e >= n) {
      throw DomainError("x" + std::to_string(i) + " is assigned a non-element");
    }
  }
  if (!options.force) {
    check_budget(f, n, 0.0, options.budget_log2.value_or(default_budget_log2()));
  }

  const double cost = branch_cost_log2(f, n);
  const bool materialize =
      n <= kMaxTableElements && uses_rank(f) && cost >= static_cast<double>(n);
  Evaluator ev(m, materialize);

  Env env;
  int max_set = max_index(f, Sort::kSet), max_elem = max_index(f, Sort::kElement);
  for (const auto& [i, s] : interp.sets()) max_set = std::max(max_set, i);
  for (const auto& [i, e] : interp.elements()) max_elem = std::max(max_elem, i);
  env.sets.assign(max_set + 1, Subset(n));
  env.elems.assign(max_elem + 1, 0);
  for (const auto& [i, s] : interp.sets()) env.sets[i] = s;
  for (const auto& [i, e] : interp.elements()) env.elems[i] = e;

  EvalResult result;
  Block block = outer_block(f);
  if (block.vars.empty()) {
    result.value = ev.eval(f, env);
    return result;
  }
  std::vector<TraceEntry> trail;
  if (options.jobs > 1 && ev.branch_count(block.vars[0]) > 1) {
    const Var& v = block.vars[0];
    std::uint64_t first = parallel_first_decisive(ev, block, env, options.jobs);
    if (first == ev.branch_count(v)) {
      result.value = !block.exists;
      return result;
    }
    result.value = block.exists;
    if (options.trace) {
      ev.bind(v, first, env);
      trail.push_back(TraceEntry{v, v.sort == Sort::kSet ? env.sets[v.index] : Subset(),
                                 v.sort == Sort::kElement ? env.elems[v.index] : 0});
      run_block(ev, block, 1, env, trail);
      result.trace = std::move(trail);
    }
    return result;
  }
  result.value = run_block(ev, block, 0, env, trail);
  if (options.trace && result.value == block.exists) result.trace = std::move(trail);
  return result;
}

Subset denote(const Term& t, const Interpretation& i, std::size_t n) {
  const auto& c = t.children();
  switch (t.kind()) {
    case TermKind::kSetVar: {
      auto it = i.sets().find(t.variable().index);
      if (it == i.sets().end()) {
        throw DomainError(t.variable().name() + " is not assigned");
      }
      return it->second;
    }
    case TermKind::kGround:
      return Subset::full(n);
    case TermKind::kEmpty:
      return Subset(n);
    case TermKind::kSingleton: {
      auto it = i.elements().find(c[0]->variable().index);
      if (it == i.elements().end()) {
        throw DomainError(c[0]->variable().name() + " is not assigned");
      }
      Subset s(n);
      s.set(it->second);
      return s;
    }
    case TermKind::kComplement:
      return denote(*c[0], i, n).complement();
    case TermKind::kUnion:
      return denote(*c[0], i, n) | denote(*c[1], i, n);
    case TermKind::kIntersection:
      return denote(*c[0], i, n) & denote(*c[1], i, n);
    default:
      throw DomainError("not a set term");
  }
}

std::string format_trace_entry(const GroundSet& g, const TraceEntry& e) {
  if (e.var.sort == Sort::kSet) return e.var.name() + " = " + g.format(e.set);
  return e.var.name() + " = " + g.name(e.element);
}

}  // namespace mlogic::msol
