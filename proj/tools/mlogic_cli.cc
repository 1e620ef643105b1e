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

// mlogic: command-line front end.
//
// Reports are "key: value" lines (or "key<TAB>value" with --format tsv),
// starting with the command echo and ending with the elapsed time unless
// --no-timing is given. Exit codes: 0 all requested checks pass, 1 a check
// failed, 2 usage or format error, 3 resource budget exceeded.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mlogic/axioms.h"
#include "mlogic/definability.h"
#include "mlogic/errors.h"
#include "mlogic/io.h"
#include "mlogic/isomorphism.h"
#include "mlogic/kinser.h"
#include "mlogic/msol/evaluator.h"
#include "mlogic/msol/parser.h"
#include "mlogic/msol/transform.h"
#include "mlogic/operations.h"

namespace mlogic::cli {
namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  bool no_timing = false;
  bool strict = false;
  bool no_validate = false;
  unsigned jobs = 1;
  std::string echo;
};

class Report {
 public:
  void add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }

  void print(std::ostream& out, const Globals& g, double ms) const {
    const char* sep = g.format == "tsv" ? "\t" : ": ";
    out << "command" << sep << g.echo << '\n';
    for (const auto& [k, v] : fields_) out << k << sep << v << '\n';
    if (!g.no_timing) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(1);
      t << ms;
      out << "time_ms" << sep << t.str() << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

LoadOptions load_options(const Globals& g) {
  LoadOptions o;
  o.validation.seed = g.seed;
  o.validation.strict = g.strict;
  o.validate = !g.no_validate;
  return o;
}

msol::EvalOptions eval_options(const Globals& g, bool force,
                               std::optional<double> budget) {
  msol::EvalOptions o;
  o.jobs = g.jobs;
  o.force = force;
  o.budget_log2 = budget;
  return o;
}

std::string trace_text(const GroundSet& ground,
                       const std::vector<msol::TraceEntry>& trace) {
  std::string out;
  for (const auto& e : trace) {
    if (!out.empty()) out += ", ";
    out += msol::format_trace_entry(ground, e);
  }
  return out;
}

// Compares a computed answer with an optional --expect.
int expectation(Report& r, bool value, const std::string& expect) {
  if (expect.empty()) return kOk;
  bool want = expect == "true";
  r.add("expected", want);
  return value == want ? kOk : kCheckFailed;
}

// ---- gen-kinser ----------------------------------------------------------

struct GenKinserArgs {
  int r = 0;
  std::vector<int> relax;
  std::string out;
};

int gen_kinser(const GenKinserArgs& a, Report& rep) {
  if (a.r < 4) throw DomainError("r must be at least 4, got " + std::to_string(a.r));
  if (a.relax.size() > 2) throw DomainError("at most two relaxations");
  KinserMatroid k = kinser_matroid(a.r, a.relax);
  if (a.out.empty()) {
    write_kinser(std::cout, k.descriptor);
  } else {
    std::ofstream f(a.out);
    if (!f) throw Error("cannot write " + a.out);
    write_kinser(f, k.descriptor);
    rep.add("file", a.out);
  }
  rep.add("elements", static_cast<long long>(k.matroid.size()));
  rep.add("rank", static_cast<long long>(k.matroid.full_rank()));
  const auto& d = k.descriptor;
  for (int s = 1; s < a.r; ++s) {
    bool relaxed = std::find(d.relaxed.begin(), d.relaxed.end(), s) != d.relaxed.end();
    rep.add(relaxed ? "relaxed" : "circuit_hyperplane",
            "H" + std::to_string(s) + "|H" + std::to_string(a.r) + " = " +
                k.matroid.ground().format(d.pair(s)));
  }
  return kOk;
}

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string matroid, sentence, interp, expect;
  bool witness = false, force = false;
  std::optional<double> budget;
};

int eval(const EvalArgs& a, const Globals& g, Report& rep) {
  MatroidFile mf = load_matroid(a.matroid, load_options(g));
  msol::FormulaPtr f = load_sentence(a.sentence);
  msol::Interpretation interp;
  if (!a.interp.empty()) interp = load_interpretation(a.interp, mf.matroid.ground());
  msol::EvalOptions o = eval_options(g, a.force, a.budget);
  o.trace = a.witness;
  msol::EvalResult res = msol::evaluate_full(mf.matroid, *f, interp, o);
  rep.add("sentence", msol::to_text(*f));
  rep.add("value", res.value);
  if (a.witness) {
    // Only a true outer exists or a false outer forall leaves a trace.
    if (res.trace.empty()) {
      rep.add("trace", "none");
    } else {
      rep.add(res.value ? "witness" : "counterexample",
              trace_text(mf.matroid.ground(), res.trace));
    }
  }
  return expectation(rep, res.value, a.expect);
}

// ---- check-kinser --------------------------------------------------------

struct CheckKinserArgs {
  std::string matroid, expect;
  int witness = 1;
};

int check_kinser(const CheckKinserArgs& a, const Globals& g, Report& rep) {
  MatroidFile mf = load_matroid(a.matroid, load_options(g));
  if (!mf.kinser) throw DomainError(a.matroid + " has no kinser body");
  KinserAssignment w = kinser_witness(mf.kinser->descriptor, a.witness);
  auto [lhs, rhs] = kinser_lhs_rhs(mf.matroid, w);
  const bool fails = lhs > rhs;
  rep.add("witness", static_cast<long long>(a.witness));
  rep.add("kinser", std::to_string(lhs) + " " + std::to_string(rhs) + " " +
                        (fails ? "fails-kinser" : "ok"));
  if (a.expect.empty()) return fails ? kCheckFailed : kOk;
  rep.add("expected", a.expect);
  return (a.expect == "fails-kinser") == fails ? kOk : kCheckFailed;
}

// ---- axioms --------------------------------------------------------------

struct AxiomsArgs {
  std::string matroid, suite = "all";
  bool dump = false, force = false;
  std::optional<double> budget;
};

std::vector<Suite> suites_for(const std::string& name) {
  if (name != "all") return {parse_suite(name)};
  return {Suite::kRank, Suite::kIndependence, Suite::kBasis, Suite::kSpanning,
          Suite::kPaving};
}

int axioms(const AxiomsArgs& a, const Globals& g, Report& rep) {
  const auto suites = suites_for(a.suite);
  if (a.dump) {
    for (Suite s : suites) {
      for (const auto& name : suite_sentences(s)) {
        rep.add(name, msol::to_text(*SentenceLibrary::instance().get(name).formula));
      }
    }
    return kOk;
  }
  if (a.matroid.empty()) throw DomainError("--matroid is required unless --dump");
  MatroidFile mf = load_matroid(a.matroid, load_options(g));
  bool all = true;
  for (Suite s : suites) {
    SuiteReport r = axiom_suite_check(mf.matroid, s, eval_options(g, a.force, a.budget));
    for (const auto& v : r.verdicts) {
      std::string text = v.holds ? "true" : "false";
      if (!v.trace.empty()) {
        text += v.holds ? " witness " : " counterexample ";
        text += trace_text(mf.matroid.ground(), v.trace);
      }
      rep.add(v.name, text);
    }
    rep.add("suite " + suite_name(s), r.all_hold() ? "pass" : "fail");
    all = all && r.all_hold();
  }
  return all ? kOk : kCheckFailed;
}

// ---- minor ---------------------------------------------------------------

struct MinorArgs {
  std::string matroid, minor, via = "both", expect;
};

int minor(const MinorArgs& a, const Globals& g, Report& rep) {
  MatroidFile host = load_matroid(a.matroid, load_options(g));
  MatroidFile n = load_matroid(a.minor, load_options(g));
  std::optional<bool> by_oracle, by_msol;
  if (a.via != "msol") {
    std::optional<MinorWitness> w = find_minor(host.matroid, n.matroid);
    by_oracle = w.has_value();
    rep.add("oracle", *by_oracle);
    if (w) {
      const GroundSet& hg = host.matroid.ground();
      rep.add("contracted", hg.format(w->contracted));
      std::string map;
      for (std::size_t i = 0; i < w->map.size(); ++i) {
        if (i) map += ", ";
        map += n.matroid.ground().name(i) + "->" + hg.name(w->map[i]);
      }
      rep.add("map", map);
    }
  }
  if (a.via != "oracle") {
    msol::FormulaPtr s = minor_sentence(n.matroid);
    by_msol = msol::evaluate(host.matroid, *s, {}, eval_options(g, false, std::nullopt));
    rep.add("msol", *by_msol);
  }
  bool value = by_oracle ? *by_oracle : *by_msol;
  if (by_oracle && by_msol) {
    rep.add("agree", *by_oracle == *by_msol);
    if (*by_oracle != *by_msol) return kCheckFailed;
  }
  return expectation(rep, value, a.expect);
}

// ---- iso -----------------------------------------------------------------

struct IsoArgs {
  std::string a, b, expect;
};

int iso(const IsoArgs& a, const Globals& g, Report& rep) {
  MatroidFile ma = load_matroid(a.a, load_options(g));
  MatroidFile mb = load_matroid(a.b, load_options(g));
  std::optional<Bijection> bij = is_isomorphic(ma.matroid, mb.matroid);
  rep.add("isomorphic", bij.has_value());
  if (bij) {
    std::string map;
    for (std::size_t i = 0; i < bij->size(); ++i) {
      if (i) map += ", ";
      map += ma.matroid.ground().name(i) + "->" + mb.matroid.ground().name((*bij)[i]);
    }
    rep.add("map", map);
  }
  return expectation(rep, bij.has_value(), a.expect);
}

// ---- definability --------------------------------------------------------

struct DefinabilityArgs {
  std::string matroid, interp, decompose;
  bool find_witness = false;
  int exclude_index = 0;
};

int definability(const DefinabilityArgs& a, const Globals& g, Report& rep) {
  MatroidFile mf = load_matroid(a.matroid, load_options(g));
  const GroundSet& ground = mf.matroid.ground();
  msol::Interpretation i = load_interpretation(a.interp, ground);
  MintermBasis basis = minterm_basis(i, ground.size());
  rep.add("variables", static_cast<long long>(basis.variables.size()));
  rep.add("minterms", static_cast<long long>(basis.minterms.size()));
  rep.add("definable_sets", std::to_string(basis.family_size()));
  if (a.find_witness) {
    if (!mf.kinser) throw DomainError(a.matroid + " has no kinser body");
    const KinserDescriptor& d = mf.kinser->descriptor;
    try {
      NondefinableChoice c = find_nondefinable_ch(d, i, a.exclude_index);
      rep.add("candidates", static_cast<long long>(c.candidates));
      rep.add("guaranteed", c.guaranteed);
      rep.add("s", static_cast<long long>(c.s));
      rep.add("circuit_hyperplane", ground.format(d.pair(c.s)));
    } catch (const DomainError& e) {
      rep.add("s", "none");
      rep.add("reason", std::string(e.what()));
      return kCheckFailed;
    }
  }
  if (!a.decompose.empty()) {
    Subset s = Subset::from_hex(ground.size(), a.decompose);
    rep.add("set", ground.format(s));
    auto parts = symdif_decompose(s, i, ground.size());
    rep.add("definable", parts.has_value());
    if (!parts) return kCheckFailed;
    rep.add("A", ground.format(parts->first));
    rep.add("B", ground.format(parts->second));
  }
  return kOk;
}

// ---- classify / rename ---------------------------------------------------

struct SentenceArgs {
  std::string sentence, expect;
};

int classify(const SentenceArgs& a, Report& rep) {
  msol::Classification c = msol::classify_mlogic(load_sentence(a.sentence));
  rep.add("class", c.mlogic ? "MLogic" : "NotNormalizable");
  rep.add("summary", c.summary);
  rep.add("prefix", c.normal_form.prefix_text());
  if (a.expect.empty()) return kOk;
  rep.add("expected", a.expect);
  return (a.expect == "mlogic") == c.mlogic ? kOk : kCheckFailed;
}

int rename(const SentenceArgs& a, Report& rep) {
  msol::ParseOptions o;
  o.check_rule5 = false;
  msol::FormulaPtr f = load_sentence(a.sentence, o);
  rep.add("input", msol::to_text(*f));
  rep.add("renamed", msol::to_text(*msol::rename_bound_conflicts(f)));
  return kOk;
}

std::string echo(int argc, char** argv) {
  std::string out = "mlogic";
  for (int i = 1; i < argc; ++i) {
    out += ' ';
    out += argv[i];
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Matroid logic toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.echo = echo(argc, argv);
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_flag("--no-timing", g.no_timing, "Omit the time_ms field");
  app.add_flag("--strict", g.strict, "Validate loaded matroids exhaustively");
  app.add_flag("--no-validate", g.no_validate,
               "Load matroid files without checking the rank axioms");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::function<int(Report&)> action;
  auto yes_no = CLI::IsMember({"true", "false"});

  GenKinserArgs gk;
  auto* c_gen = app.add_subcommand("gen-kinser", "Write Kin(r), optionally relaxed");
  c_gen->add_option("r", gk.r, "Rank, at least 4")->required();
  c_gen->add_option("--relax", gk.relax, "Relax H_s|H_r (up to twice)");
  c_gen->add_option("-o,--output", gk.out, "Output file (stdout if omitted)");
  c_gen->callback([&] { action = [&](Report& r) { return gen_kinser(gk, r); }; });

  EvalArgs ev;
  auto* c_eval = app.add_subcommand("eval", "Evaluate a sentence on a matroid");
  c_eval->add_option("-m,--matroid", ev.matroid)->required();
  c_eval->add_option("-s,--sentence", ev.sentence)->required();
  c_eval->add_option("-i,--interp", ev.interp, "Values for free variables");
  c_eval->add_flag("--witness", ev.witness, "Print witness or counterexample");
  c_eval->add_option("--expect", ev.expect)->check(yes_no);
  c_eval->add_flag("--force", ev.force, "Ignore the search budget");
  c_eval->add_option("--budget-log2", ev.budget, "Search budget exponent");
  c_eval->callback([&] { action = [&](Report& r) { return eval(ev, g, r); }; });

  CheckKinserArgs ck;
  auto* c_ck = app.add_subcommand("check-kinser", "Kinser inequality at the block witness");
  c_ck->add_option("-m,--matroid", ck.matroid)->required();
  c_ck->add_option("--witness", ck.witness, "Index s of the witness");
  c_ck->add_option("--expect", ck.expect)->check(CLI::IsMember({"ok", "fails-kinser"}));
  c_ck->callback([&] { action = [&](Report& r) { return check_kinser(ck, g, r); }; });

  AxiomsArgs ax;
  auto* c_ax = app.add_subcommand("axioms", "Evaluate the axiom suites");
  c_ax->add_option("-m,--matroid", ax.matroid);
  c_ax->add_option("--suite", ax.suite)
      ->check(CLI::IsMember({"all", "rank", "indep", "basis", "spanning", "paving"}));
  c_ax->add_flag("--dump", ax.dump, "Print the sentences instead");
  c_ax->add_flag("--force", ax.force, "Ignore the search budget");
  c_ax->add_option("--budget-log2", ax.budget, "Search budget exponent");
  c_ax->callback([&] { action = [&](Report& r) { return axioms(ax, g, r); }; });

  MinorArgs mn;
  auto* c_mn = app.add_subcommand("minor", "Test for a minor");
  c_mn->add_option("-m,--matroid", mn.matroid)->required();
  c_mn->add_option("-n,--minor", mn.minor)->required();
  c_mn->add_option("--via", mn.via)->check(CLI::IsMember({"msol", "oracle", "both"}));
  c_mn->add_option("--expect", mn.expect)->check(yes_no);
  c_mn->callback([&] { action = [&](Report& r) { return minor(mn, g, r); }; });

  IsoArgs is;
  auto* c_iso = app.add_subcommand("iso", "Test two matroids for isomorphism");
  c_iso->add_option("a", is.a)->required();
  c_iso->add_option("b", is.b)->required();
  c_iso->add_option("--expect", is.expect)->check(yes_no);
  c_iso->callback([&] { action = [&](Report& r) { return iso(is, g, r); }; });

  DefinabilityArgs df;
  auto* c_df = app.add_subcommand("definability", "Definable sets of an interpretation");
  c_df->add_option("-m,--matroid", df.matroid)->required();
  c_df->add_option("-i,--interp", df.interp)->required();
  auto* fw = c_df->add_flag("--find-witness", df.find_witness,
                            "Find a non-definable circuit-hyperplane");
  c_df->add_option("--decompose", df.decompose, "Hex mask to split as (A - T) | B")
      ->excludes(fw);
  c_df->add_option("--exclude-index", df.exclude_index, "Skip this index");
  c_df->callback([&] { action = [&](Report& r) { return definability(df, g, r); }; });

  SentenceArgs cl;
  auto* c_cl = app.add_subcommand("classify", "M-logic classification of a sentence");
  c_cl->add_option("-s,--sentence", cl.sentence)->required();
  c_cl->add_option("--expect", cl.expect)->check(CLI::IsMember({"mlogic", "not"}));
  c_cl->callback([&] { action = [&](Report& r) { return classify(cl, r); }; });

  SentenceArgs rn;
  auto* c_rn = app.add_subcommand("rename", "Rename bound variables that collide");
  c_rn->add_option("-s,--sentence", rn.sentence)->required();
  c_rn->callback([&] { action = [&](Report& r) { return rename(rn, r); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  int code = kOk;
  try {
    code = action(rep);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  // gen-kinser without -o writes the file to stdout; keep it clean.
  std::ostream& out = (c_gen->parsed() && gk.out.empty()) ? std::cerr : std::cout;
  rep.print(out, g, ms);
  return code;
}

}  // namespace
}  // namespace mlogic::cli

int main(int argc, char** argv) { return mlogic::cli::run(argc, argv); }
