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

#include "mlogic/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mlogic/errors.h"
#include "mlogic/explicit.h"
#include "mlogic/operations.h"
#include "mlogic/oracles.h"

namespace mlogic {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::vector<Token> tokens;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& msg) {
  throw ParseError(msg, line.number, column);
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  fail(line, line.tokens.empty() ? 1 : line.tokens[0].column, msg);
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next(const std::string& expected) {
    if (done()) {
      std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError("unexpected end of input, expected " + expected, last, 1);
    }
    return lines_[pos_++];
  }
  bool at_keyword(const std::string& kw) const {
    return !done() && peek().tokens[0].text == kw;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void expect_header(Cursor& c, const std::string& kind) {
  const Line& h = c.next("'" + kind + " v1'");
  if (h.tokens.size() != 2 || h.tokens[0].text != kind || h.tokens[1].text != "v1") {
    fail(h, "expected '" + kind + " v1'");
  }
}

long parse_int(const Line& line, const Token& t, long lo, long hi) {
  long v = 0;
  auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || end != t.text.data() + t.text.size()) {
    fail(line, t.column, "expected an integer, got '" + t.text + "'");
  }
  if (v < lo || v > hi) {
    fail(line, t.column, "value " + t.text + " outside " + std::to_string(lo) +
                             ".." + std::to_string(hi));
  }
  return v;
}

std::shared_ptr<const GroundSet> read_elements(Cursor& c) {
  const Line& line = c.next("'elements'");
  if (line.tokens[0].text != "elements") fail(line, "expected 'elements'");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const Token& t = line.tokens[i];
    if (!seen.insert(t.text).second) {
      fail(line, t.column, "duplicate element '" + t.text + "'");
    }
    names.push_back(t.text);
  }
  return std::make_shared<const GroundSet>(std::move(names));
}

std::size_t element(const Line& line, const Token& t, const GroundSet& g) {
  auto i = g.find(t.text);
  if (!i) fail(line, t.column, "unknown element '" + t.text + "'");
  return *i;
}

Subset element_set(const Line& line, std::size_t from, const GroundSet& g) {
  Subset s(g.size());
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    const Token& t = line.tokens[i];
    std::size_t e = element(line, t, g);
    if (s.test(e)) fail(line, t.column, "element '" + t.text + "' repeated");
    s.set(e);
  }
  return s;
}

Matroid read_bases(Cursor& c, const std::shared_ptr<const GroundSet>& g) {
  std::vector<Subset> bases;
  std::set<Subset> seen;
  while (!c.done()) {
    const Line& line = c.next("a basis");
    Subset b(g->size());
    if (!(line.tokens.size() == 1 && line.tokens[0].text == "-")) {
      b = element_set(line, 0, *g);
    }
    if (!bases.empty() && b.count() != bases[0].count()) {
      fail(line, "basis size " + std::to_string(b.count()) + " differs from " +
                     std::to_string(bases[0].count()));
    }
    if (!seen.insert(b).second) fail(line, "basis listed twice");
    bases.push_back(std::move(b));
  }
  if (bases.empty()) throw ParseError("no bases listed", 1, 1);
  return Matroid(g, std::make_shared<BasesOracle>(g->size(), std::move(bases)));
}

Matroid read_ranktable(Cursor& c, const std::shared_ptr<const GroundSet>& g) {
  const std::size_t n = g->size();
  if (n > kMaxMaterializedElements) {
    throw ResourceError("a rank table on " + std::to_string(n) +
                        " elements is too large (limit " +
                        std::to_string(kMaxMaterializedElements) + ")");
  }
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> table(total);
  std::vector<bool> given(total, false);
  std::size_t count = 0;
  while (!c.done()) {
    const Line& line = c.next("a rank table entry");
    if (line.tokens.size() != 2 || line.tokens[0].text.back() != ':') {
      fail(line, "expected '<hex mask>: <rank>'");
    }
    std::string hex = line.tokens[0].text;
    hex.pop_back();
    Subset s;
    try {
      s = Subset::from_hex(n, hex);
    } catch (const DomainError& e) {
      fail(line, line.tokens[0].column, e.what());
    }
    std::size_t mask = static_cast<std::size_t>(s.to_mask());
    if (given[mask]) fail(line, "mask " + hex + " listed twice");
    given[mask] = true;
    ++count;
    table[mask] = static_cast<std::uint8_t>(
        parse_int(line, line.tokens[1], 0, static_cast<long>(n)));
  }
  if (count != total) {
    throw ParseError("rank table lists " + std::to_string(count) + " of " +
                         std::to_string(total) + " subsets",
                     1, 1);
  }
  return Matroid(g, std::make_shared<TableOracle>(n, std::move(table)));
}

KinserMatroid read_kinser(const Line& line, const GroundSet& g) {
  const auto& t = line.tokens;
  if (t.size() < 2) fail(line, "expected 'kinser <r> [relax <s> [<t>]]'");
  int r = static_cast<int>(parse_int(line, t[1], 4, 1000));
  std::vector<int> relaxed;
  if (t.size() > 2) {
    if (t[2].text != "relax" || t.size() < 4 || t.size() > 5) {
      fail(line, t[2].column, "expected 'relax <s> [<t>]'");
    }
    for (std::size_t i = 3; i < t.size(); ++i) {
      relaxed.push_back(static_cast<int>(parse_int(line, t[i], 1, r - 1)));
    }
    if (relaxed.size() == 2 && relaxed[0] == relaxed[1]) {
      fail(line, t[4].column, "relax indices must differ");
    }
  }
  KinserMatroid k = kinser_matroid(r, relaxed);
  if (!(k.matroid.ground() == g)) {
    throw ValidationError("elements line does not list the " +
                          std::to_string(k.matroid.size()) +
                          " elements of Kin(" + std::to_string(r) +
                          ") in order");
  }
  return k;
}

// The designated circuit-hyperplanes that were not relaxed.
void check_kinser(const KinserMatroid& k) {
  const auto& d = k.descriptor;
  if (k.matroid.full_rank() != d.r) {
    throw ValidationError("Kin(" + std::to_string(d.r) + ") has rank " +
                          std::to_string(k.matroid.full_rank()));
  }
  for (int s = 1; s < d.r; ++s) {
    bool relaxed =
        std::find(d.relaxed.begin(), d.relaxed.end(), s) != d.relaxed.end();
    if (!relaxed && !is_circuit_hyperplane(k.matroid, d.pair(s))) {
      throw ValidationError("H_" + std::to_string(s) +
                            " | H_r is not a circuit-hyperplane");
    }
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

}  // namespace

MatroidFile read_matroid(std::istream& in, const LoadOptions& options) {
  Cursor c(read_lines(in));
  expect_header(c, "matroid");
  auto g = read_elements(c);
  std::optional<int> declared;
  if (c.at_keyword("rank")) {
    const Line& line = c.next("rank");
    if (line.tokens.size() != 2) fail(line, "expected 'rank <k>'");
    declared = static_cast<int>(
        parse_int(line, line.tokens[1], 0, static_cast<long>(g->size())));
  }
  const Line& body = c.next("a body (bases, ranktable or kinser)");
  const std::string& kind = body.tokens[0].text;
  std::optional<Matroid> m;
  std::optional<KinserMatroid> kin;
  if (kind == "bases" || kind == "ranktable") {
    if (body.tokens.size() != 1) fail(body, body.tokens[1].column, "unexpected text");
    m = kind == "bases" ? read_bases(c, g) : read_ranktable(c, g);
    if (options.validate) {
      ValidationReport rep = check_rank_axioms(*m, options.validation);
      if (!rep.ok) throw ValidationError("not a matroid: " + rep.violation);
    }
  } else if (kind == "kinser") {
    kin = read_kinser(body, *g);
    m = kin->matroid;
    if (!c.done()) fail(c.peek(), "unexpected text after kinser body");
    if (options.validate) check_kinser(*kin);
  } else {
    fail(body, "expected 'bases', 'ranktable' or 'kinser', got '" + kind + "'");
  }
  if (declared && *declared != m->full_rank()) {
    throw ValidationError("declared rank " + std::to_string(*declared) +
                          " but the body has rank " +
                          std::to_string(m->full_rank()));
  }
  return MatroidFile{std::move(*m), std::move(kin)};
}

MatroidFile load_matroid(const std::string& path, const LoadOptions& options) {
  auto in = open(path);
  return read_matroid(in, options);
}

void write_matroid(std::ostream& out, const Matroid& m, MatroidBody body) {
  const std::size_t n = m.size();
  if (body == MatroidBody::kAuto) {
    if (n > kMaxBasesElements) {
      throw ResourceError("refusing to list the bases of a " + std::to_string(n) +
                          "-element matroid; ask for a rank table");
    }
    body = MatroidBody::kBases;
  }
  out << "matroid v1\n";
  out << "elements";
  for (const auto& name : m.ground().names()) out << ' ' << name;
  out << "\nrank " << m.full_rank() << '\n';
  if (body == MatroidBody::kBases) {
    out << "bases\n";
    const int k = m.full_rank();
    if (k == 0) {
      out << "-\n";
      return;
    }
    for_each_k_subset(n, static_cast<std::size_t>(k), [&](const Subset& s) {
      if (m.rank(s) == k) out << m.ground().join(s) << '\n';
      return true;
    });
    return;
  }
  std::vector<std::uint8_t> table = rank_table(m);
  out << "ranktable\n";
  for (std::size_t x = 0; x < table.size(); ++x) {
    out << Subset::from_mask(n, x).to_hex() << ": " << int(table[x]) << '\n';
  }
}

void write_kinser(std::ostream& out, const KinserDescriptor& d) {
  out << "matroid v1\n";
  out << "elements";
  KinserMatroid k = kinser_matroid(d.r, d.relaxed);
  for (const auto& name : k.matroid.ground().names()) out << ' ' << name;
  out << "\nrank " << d.r << "\nkinser " << d.r;
  if (!d.relaxed.empty()) {
    out << " relax";
    for (int s : d.relaxed) out << ' ' << s;
  }
  out << '\n';
}

void write_matroid(std::ostream& out, const MatroidFile& f, MatroidBody body) {
  if (f.kinser && body == MatroidBody::kAuto) {
    write_kinser(out, f.kinser->descriptor);
  } else {
    write_matroid(out, f.matroid, body);
  }
}

SetSystem read_set_system(std::istream& in) {
  Cursor c(read_lines(in));
  expect_header(c, "setsystem");
  auto g = read_elements(c);
  std::vector<SetSystem::Family> families;
  std::set<std::string> names;
  while (!c.done()) {
    const Line& line = c.next("a family");
    if (line.tokens[0].text != "family") fail(line, "expected 'family <name>: ...'");
    std::size_t colon = line.text.find(':');
    if (colon == std::string::npos) fail(line, "missing ':' after the family name");
    std::size_t name_start = line.tokens.size() > 1 ? line.tokens[1].column - 1 : colon;
    std::string name = line.text.substr(name_start, colon - name_start);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
      name.pop_back();
    }
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
      fail(line, line.tokens[0].column, "bad family name");
    }
    if (!names.insert(name).second) fail(line, "family '" + name + "' repeated");
    // Members are the tokens after the colon.
    Line rest = line;
    rest.tokens.clear();
    for (const auto& t : line.tokens) {
      if (t.column - 1 > colon) rest.tokens.push_back(t);
      else if (t.column - 1 + t.text.size() > colon + 1) {
        // "name:a" written without a space.
        std::size_t cut = colon + 1 - (t.column - 1);
        rest.tokens.push_back({t.text.substr(cut), colon + 2});
      }
    }
    families.push_back({name, element_set(rest, 0, *g)});
  }
  return SetSystem(g, std::move(families));
}

SetSystem load_set_system(const std::string& path) {
  auto in = open(path);
  return read_set_system(in);
}

void write_set_system(std::ostream& out, const SetSystem& s) {
  out << "setsystem v1\nelements";
  for (const auto& name : s.ground().names()) out << ' ' << name;
  out << '\n';
  for (const auto& f : s.families()) {
    out << "family " << f.name << ':';
    if (!f.members.empty()) out << ' ' << s.ground().join(f.members);
    out << '\n';
  }
}

msol::Interpretation read_interpretation(std::istream& in, const GroundSet& g) {
  Cursor c(read_lines(in));
  expect_header(c, "interp");
  msol::Interpretation interp;
  std::set<std::string> seen;
  while (!c.done()) {
    const Line& line = c.next("an assignment");
    const auto& t = line.tokens;
    if (t.size() < 2 || t[1].text != "=") fail(line, "expected '<variable> = ...'");
    const std::string& v = t[0].text;
    bool is_set = v[0] == 'X';
    int index = 0;
    if ((v[0] != 'X' && v[0] != 'x') || v.size() < 2 ||
        v.find_first_not_of("0123456789", 1) != std::string::npos) {
      fail(line, t[0].column, "expected a variable X<i> or x<j>, got '" + v + "'");
    }
    index = static_cast<int>(parse_int(line, Token{v.substr(1), t[0].column + 1}, 1,
                                       1000000));
    if (!seen.insert(v).second) fail(line, t[0].column, v + " assigned twice");
    if (is_set) {
      interp.assign_set(index, element_set(line, 2, g));
    } else {
      if (t.size() != 3) fail(line, "element variable " + v + " takes one element");
      interp.assign_element(index, element(line, t[2], g));
    }
  }
  return interp;
}

msol::Interpretation load_interpretation(const std::string& path,
                                         const GroundSet& g) {
  auto in = open(path);
  return read_interpretation(in, g);
}

void write_interpretation(std::ostream& out, const msol::Interpretation& i,
                          const GroundSet& g) {
  out << "interp v1\n";
  for (const auto& [k, s] : i.sets()) {
    out << 'X' << k << " =";
    if (!s.empty()) out << ' ' << g.join(s);
    out << '\n';
  }
  for (const auto& [k, e] : i.elements()) out << 'x' << k << " = " << g.name(e) << '\n';
}

std::string read_file(const std::string& path) {
  auto in = open(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

msol::FormulaPtr load_sentence(const std::string& path,
                               const msol::ParseOptions& options) {
  return msol::parse_formula(read_file(path), options);
}

}  // namespace mlogic
