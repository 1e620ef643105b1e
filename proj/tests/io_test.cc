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

#include <sstream>

#include "gtest/gtest.h"
#include "mlogic/catalog.h"
#include "mlogic/errors.h"
#include "mlogic/explicit.h"
#include "test_matroids.h"

namespace mlogic {
namespace {

const std::string kData = MLOGIC_EXAMPLES_DIR;

MatroidFile parse(const std::string& text, LoadOptions o = {}) {
  std::istringstream in(text);
  return read_matroid(in, o);
}

std::string written(const Matroid& m, MatroidBody body = MatroidBody::kAuto) {
  std::ostringstream out;
  write_matroid(out, m, body);
  return out.str();
}

TEST(Io, ReadsBasesBody) {
  MatroidFile f = load_matroid(kData + "/u24.m");
  EXPECT_FALSE(f.kinser);
  EXPECT_EQ(rank_table(f.matroid), rank_table(uniform_matroid(2, 4)));
}

TEST(Io, ReadsKinserBody) {
  MatroidFile f = load_matroid(kData + "/vamos.m");
  ASSERT_TRUE(f.kinser);
  EXPECT_EQ(f.kinser->descriptor.relaxed, std::vector<int>{1});
  EXPECT_EQ(f.matroid.size(), 8u);
  EXPECT_EQ(f.matroid.full_rank(), 4);
}

TEST(Io, EmptyBasisIsADash) {
  MatroidFile f = parse("matroid v1\nelements a b\nbases\n-\n");
  EXPECT_EQ(f.matroid.full_rank(), 0);
  EXPECT_NE(written(f.matroid).find("bases\n-\n"), std::string::npos);
}

TEST(Io, RoundTripsCorpus) {
  for (const Matroid& m : testing_corpus()) {
    for (MatroidBody body : {MatroidBody::kBases, MatroidBody::kRankTable}) {
      MatroidFile back = parse(written(m, body));
      EXPECT_EQ(back.matroid.ground().names(), m.ground().names());
      EXPECT_EQ(rank_table(back.matroid), rank_table(m));
    }
  }
}

TEST(Io, WriterPicksCompactBody) {
  KinserMatroid k = kinser_matroid(5, {2});
  std::ostringstream out;
  write_matroid(out, MatroidFile{k.matroid, k}, MatroidBody::kAuto);
  EXPECT_NE(out.str().find("kinser 5 relax 2\n"), std::string::npos);
  MatroidFile back = parse(out.str());
  ASSERT_TRUE(back.kinser);
  EXPECT_EQ(back.kinser->descriptor.relaxed, std::vector<int>{2});

  EXPECT_THROW(written(uniform_matroid(2, 17)), ResourceError);
  EXPECT_NE(written(uniform_matroid(1, 17), MatroidBody::kRankTable).find("ranktable"),
            std::string::npos);
}

TEST(Io, RejectsNonMatroids) {
  EXPECT_THROW(load_matroid(kData + "/corrupted.m"), ValidationError);
  LoadOptions lax;
  lax.validate = false;
  EXPECT_EQ(load_matroid(kData + "/corrupted.m", lax).matroid.full_rank(), 2);
  // Two bases violating exchange.
  EXPECT_THROW(parse("matroid v1\nelements a b c d\nbases\na b\nc d\n"),
               ValidationError);
  EXPECT_THROW(parse("matroid v1\nelements a b\nrank 1\nbases\na b\n"),
               ValidationError);
}

TEST(Io, FormatErrorsCarryPositions) {
  auto position = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  EXPECT_EQ(position("matroid v2\n"), std::make_pair(std::size_t{1}, std::size_t{1}));
  EXPECT_EQ(position("matroid v1\nelements a b\nbases\na q\n"),
            std::make_pair(std::size_t{4}, std::size_t{3}));
  EXPECT_EQ(position("matroid v1\nelements a a\n"),
            std::make_pair(std::size_t{2}, std::size_t{12}));
  EXPECT_EQ(position("# note\n\nmatroid v1\nelements a\nrank x\n"),
            std::make_pair(std::size_t{5}, std::size_t{6}));
  EXPECT_THROW(parse("matroid v1\nelements a b\nbases\na\na\n"), ParseError);
  EXPECT_THROW(parse("matroid v1\nelements a b\nranktable\n0: 0\n1: 1\n"),
               ParseError);
  EXPECT_THROW(parse("matroid v1\nelements a\nranktable\n0: 0\n1: 1\n0x1: 1\n"),
               ParseError);
  EXPECT_THROW(parse("matroid v1\nelements a\nranktable\n0: 0\n1: 2\n"), ParseError);
  EXPECT_THROW(parse("matroid v1\nelements a\ncircuits\n"), ParseError);
  EXPECT_THROW(parse("matroid v1\nelements a b\nkinser 3\n"), ParseError);
  EXPECT_THROW(parse("matroid v1\nelements a b\nkinser 4\n"), ValidationError);
}

TEST(Io, KinserRelaxIndices) {
  const std::string head =
      "matroid v1\nelements h1_1 h1_2 h2_1 h2_2 h3_1 h3_2 e f\n";
  EXPECT_EQ(parse(head + "kinser 4 relax 1 2\n").kinser->descriptor.relaxed,
            (std::vector<int>{1, 2}));
  EXPECT_THROW(parse(head + "kinser 4 relax 4\n"), ParseError);
  EXPECT_THROW(parse(head + "kinser 4 relax 2 2\n"), ParseError);
  EXPECT_THROW(parse(head + "kinser 4 relax\n"), ParseError);
}

TEST(Io, SetSystemRoundTrip) {
  SetSystem s = load_set_system(kData + "/families.ss");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.family(1).name, "A2");
  EXPECT_EQ(s.ground().format(s.family(1).members), "{b, c}");
  std::ostringstream out;
  write_set_system(out, s);
  std::istringstream in(out.str());
  SetSystem back = read_set_system(in);
  EXPECT_EQ(back.family(0).members, s.family(0).members);

  std::istringstream empty("setsystem v1\nelements a\nfamily Z:\n");
  EXPECT_TRUE(read_set_system(empty).family(0).members.empty());
  std::istringstream dup("setsystem v1\nelements a\nfamily Z: a\nfamily Z: a\n");
  EXPECT_THROW(read_set_system(dup), ParseError);
}

TEST(Io, InterpretationRoundTrip) {
  KinserMatroid k = kinser_matroid(4);
  msol::Interpretation i =
      load_interpretation(kData + "/kin4_pair1.interp", k.matroid.ground());
  EXPECT_EQ(i.sets().at(1), k.descriptor.pair(1));
  EXPECT_EQ(k.matroid.ground().name(i.elements().at(1)), "h2_1");

  std::ostringstream out;
  write_interpretation(out, i, k.matroid.ground());
  EXPECT_EQ(out.str(), "interp v1\nX1 = h1_1 h1_2 e f\nx1 = h2_1\n");

  auto bad = [&](const std::string& text) {
    std::istringstream in(text);
    return read_interpretation(in, k.matroid.ground());
  };
  EXPECT_THROW(bad("interp v1\nx1 = e f\n"), ParseError);
  EXPECT_THROW(bad("interp v1\nX1 = q\n"), ParseError);
  EXPECT_THROW(bad("interp v1\nY1 = e\n"), ParseError);
  EXPECT_THROW(bad("interp v1\nX1 = e\nX1 = f\n"), ParseError);
  EXPECT_TRUE(bad("interp v1\nX2 =\n").sets().at(2).empty());
}

TEST(Io, SentenceFiles) {
  msol::FormulaPtr f = load_sentence(kData + "/R3.msol");
  EXPECT_TRUE(f->free().empty());
  EXPECT_THROW(load_sentence(kData + "/missing.msol"), Error);
}

}  // namespace
}  // namespace mlogic
