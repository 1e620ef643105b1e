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

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "mlogic/catalog.h"
#include "mlogic/errors.h"
#include "mlogic/explicit.h"
#include "mlogic/isomorphism.h"
#include "mlogic/operations.h"
#include "mlogic/oracles.h"
#include "mlogic/validate.h"
#include "test_matroids.h"

namespace mlogic {
namespace {

TEST(SubsetTest, BasicSetAlgebra) {
  Subset a = Subset::from_indices(70, {0, 3, 65});
  Subset b = Subset::from_indices(70, {3, 4});
  EXPECT_EQ(a.count(), 3u);
  EXPECT_EQ((a | b).count(), 4u);
  EXPECT_EQ((a & b), Subset::from_indices(70, {3}));
  EXPECT_EQ((a - b), Subset::from_indices(70, {0, 65}));
  EXPECT_EQ((a ^ b), Subset::from_indices(70, {0, 4, 65}));
  EXPECT_EQ(a.complement().count(), 67u);
  EXPECT_TRUE(Subset::from_indices(70, {3}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.elements(), (std::vector<std::size_t>{0, 3, 65}));
  EXPECT_EQ(a.first(), 0u);
  EXPECT_EQ(a.next(3), 65u);
  EXPECT_EQ(a.next(65), 70u);
}

TEST(SubsetTest, HexRoundTrip) {
  Subset a = Subset::from_indices(70, {0, 3, 65});
  EXPECT_EQ(Subset::from_hex(70, a.to_hex()), a);
  EXPECT_EQ(Subset::from_mask(8, 0xa5).to_hex(), "a5");
  EXPECT_EQ(Subset(4).to_hex(), "0");
}

TEST(SubsetTest, OutOfRangeIndexThrows) {
  EXPECT_THROW(Subset::from_indices(3, {3}), DomainError);
}

TEST(GroundSetTest, RejectsBadNames) {
  EXPECT_THROW(GroundSet({"a", "a"}), ValidationError);
  EXPECT_THROW(GroundSet({"a", ""}), ValidationError);
  EXPECT_THROW(GroundSet({"a b"}), ValidationError);
}

TEST(GroundSetTest, UnknownElementIsNamed) {
  GroundSet g({"a", "b"});
  try {
    g.index_of("zz");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
  EXPECT_EQ(g.format(g.subset({"b", "a"})), "{a, b}");
}

TEST(MatroidTest, RankQueries) {
  Matroid u24 = uniform_matroid(2, 4);
  EXPECT_EQ(u24.rank(Subset(4)), 0);
  EXPECT_EQ(u24.rank({"a", "b", "c"}), 2);
  EXPECT_EQ(u24.full_rank(), 2);
  EXPECT_THROW(u24.rank({"a", "q"}), DomainError);
  EXPECT_THROW(u24.rank(Subset(5)), DomainError);
}

TEST(MatroidTest, DeclaredRankMismatchThrows) {
  Matroid u24 = uniform_matroid(2, 4);
  EXPECT_THROW(Matroid(u24.ground_ptr(), u24.oracle(), 3), ValidationError);
}

TEST(MatroidTest, MemoizedAgrees) {
  Matroid v = vamos_matroid();
  Matroid memo = v.memoized();
  EXPECT_EQ(rank_table(v), rank_table(memo));
  EXPECT_EQ(rank_table(v), rank_table(memo));
}

TEST(OperationsTest, TruncateUniform) {
  EXPECT_EQ(rank_table(truncate(uniform_matroid(3, 4))),
            rank_table(uniform_matroid(2, 4)));
  EXPECT_EQ(rank_table(truncate(free_matroid(3))),
            rank_table(uniform_matroid(2, 3)));
  EXPECT_THROW(truncate(uniform_matroid(0, 3)), ValidationError);
}

TEST(OperationsTest, ContractAndDelete) {
  Matroid u24 = uniform_matroid(2, 4);
  Subset a = Subset::from_indices(4, {0});
  EXPECT_EQ(rank_table(contract(u24, a)), rank_table(uniform_matroid(1, 3)));
  EXPECT_EQ(rank_table(contract(u24, Subset(4))), rank_table(u24));
  EXPECT_EQ(rank_table(delete_elements(u24, a)),
            rank_table(uniform_matroid(2, 3)));
  EXPECT_EQ(contract(u24, a).ground().names(),
            (std::vector<std::string>{"b", "c", "d"}));
}

// Independence in M / C equals independence of X ∪ B_C in M for a basis B_C
// of C; checked against the rank-difference formula.
TEST(OperationsTest, ContractionMatchesBasisDefinition) {
  for (const Matroid& m : testing_corpus()) {
    const std::size_t n = m.size();
    for (std::uint64_t c = 0; c < (1u << n); ++c) {
      Subset cs = Subset::from_mask(n, c);
      Subset basis(n);
      cs.for_each([&](std::size_t i) {
        if (m.is_independent(basis.with(i))) basis.set(i);
      });
      Matroid mc = contract(m, cs);
      auto kept = cs.complement().elements();
      for (std::uint64_t x = 0; x < (1u << kept.size()); ++x) {
        Subset lifted = basis;
        for (std::size_t i = 0; i < kept.size(); ++i) {
          if (x >> i & 1) lifted.set(kept[i]);
        }
        bool by_basis = m.is_independent(lifted);
        bool by_rank = mc.is_independent(Subset::from_mask(kept.size(), x));
        ASSERT_EQ(by_basis, by_rank);
      }
    }
  }
}

TEST(OperationsTest, DeleteContractCommute) {
  Matroid v = vamos_matroid();
  const std::size_t n = v.size();
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint64_t c = rng() & 0xff;
    std::uint64_t d = rng() & 0xff & ~c;
    Subset cs = Subset::from_mask(n, c), ds = Subset::from_mask(n, d);
    // Both routes end on E - c - d in declaration order.
    Matroid left = contract(v, cs);
    Subset d_in_left(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (ds.test(v.ground().index_of(left.ground().name(i)))) d_in_left.set(i);
    }
    left = delete_elements(left, d_in_left);
    Matroid right = delete_elements(v, ds);
    Subset c_in_right(right.size());
    for (std::size_t i = 0; i < right.size(); ++i) {
      if (cs.test(v.ground().index_of(right.ground().name(i)))) c_in_right.set(i);
    }
    right = contract(right, c_in_right);
    ASSERT_EQ(left.ground().names(), right.ground().names());
    ASSERT_EQ(rank_table(left), rank_table(right));
  }
}

TEST(OperationsTest, CircuitsOfU24) {
  auto cs = circuits(uniform_matroid(2, 4));
  ASSERT_EQ(cs.size(), 4u);
  for (const auto& c : cs) EXPECT_EQ(c.count(), 3u);
  EXPECT_EQ(cs[0], Subset::from_indices(4, {0, 1, 2}));
}

TEST(OperationsTest, CircuitsFormAnAntichainOfMinimalDependentSets) {
  for (const Matroid& m : testing_corpus()) {
    auto cs = circuits(m);
    for (const auto& c : cs) {
      EXPECT_FALSE(m.is_independent(c));
      c.for_each([&](std::size_t i) {
        EXPECT_TRUE(m.is_independent(c.without(i)));
      });
      for (const auto& d : cs) {
        if (!(c == d)) EXPECT_FALSE(c.is_subset_of(d));
      }
    }
  }
}

TEST(OperationsTest, SpanningCircuitIsNotACircuitHyperplane) {
  Matroid u24 = uniform_matroid(2, 4);
  for_each_k_subset(4, 3, [&](const Subset& s) {
    EXPECT_TRUE(is_circuit(u24, s));
    EXPECT_FALSE(is_circuit_hyperplane(u24, s));
    return true;
  });
}

TEST(OperationsTest, RelaxRequiresCircuitHyperplane) {
  Matroid u24 = uniform_matroid(2, 4);
  Subset abc = Subset::from_indices(4, {0, 1, 2});
  EXPECT_THROW(relax(u24, abc), ValidationError);
  Matroid forced = relax(u24, abc, /*force=*/true);
  EXPECT_EQ(forced.rank(abc), 3);
}

TEST(OperationsTest, VamosPlanesAreCircuitHyperplanes) {
  Matroid v = vamos_matroid();
  auto four = circuits(v, 4);
  ASSERT_EQ(four.size(), 5u);
  for (const auto& c : four) EXPECT_TRUE(is_circuit_hyperplane(v, c));
  EXPECT_TRUE(v.is_independent(v.ground().subset({"e", "f", "g", "h"})));
}

// Relaxation changes exactly one rank.
TEST(OperationsTest, RelaxChangesOneSubset) {
  Matroid v = vamos_matroid();
  Subset abcd = v.ground().subset({"a", "b", "c", "d"});
  auto before = rank_table(v);
  auto after = rank_table(relax(v, abcd));
  int changed = 0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] != after[i]) {
      ++changed;
      EXPECT_EQ(i, abcd.to_mask());
      EXPECT_EQ(after[i], before[i] + 1);
    }
  }
  EXPECT_EQ(changed, 1);
}

TEST(ValidateTest, CorpusPassesExhaustively) {
  for (const Matroid& m : testing_corpus()) {
    auto report = check_rank_axioms(m);
    EXPECT_TRUE(report.ok) << report.violation;
    EXPECT_TRUE(report.exhaustive);
  }
}

TEST(ValidateTest, CorruptedTableFailsSubmodularity) {
  Matroid bad = corrupted_matroid();
  auto report = check_rank_axioms(bad);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.violation.rfind("R3", 0), 0u) << report.violation;
  EXPECT_THROW(validate_matroid(bad), ValidationError);
}

TEST(ValidateTest, NonMonotoneFails) {
  auto ground = std::make_shared<const GroundSet>(default_names(2));
  Matroid bad(ground, std::make_shared<TableOracle>(
                          2, std::vector<std::uint8_t>{0, 1, 1, 0}));
  auto report = check_rank_axioms(bad);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.violation.rfind("R2", 0), 0u) << report.violation;
}

TEST(ValidateTest, SampledModeAboveLimit) {
  Matroid u = uniform_matroid(5, 16);
  ValidationOptions opts;
  opts.samples = 500;
  auto report = check_rank_axioms(u, opts);
  EXPECT_TRUE(report.ok);
  EXPECT_FALSE(report.exhaustive);
}

TEST(ValidateTest, StrictRefusesHugeStructures) {
  ValidationOptions opts;
  opts.strict = true;
  EXPECT_THROW(check_rank_axioms(uniform_matroid(3, 30), opts), ResourceError);
}

TEST(ExplicitTest, MaterializeLimit) {
  EXPECT_THROW(ExplicitMatroid::materialize(uniform_matroid(2, 25)),
               ResourceError);
  auto e = ExplicitMatroid::materialize(uniform_matroid(2, 4));
  EXPECT_EQ(e.table().size(), 16u);
  EXPECT_EQ(e.rank(0xf), 2);
}

TEST(ExplicitTest, ValidatesOnConstruction) {
  auto ground = std::make_shared<const GroundSet>(default_names(2));
  EXPECT_THROW(ExplicitMatroid(ground, {0, 1, 1, 0}), ValidationError);
  EXPECT_NO_THROW(ExplicitMatroid(ground, {0, 1, 1, 0},
                                  ExplicitMatroid::Check::kSkip));
}

TEST(IsomorphismTest, ReflexiveOnU24) {
  Matroid u24 = uniform_matroid(2, 4);
  auto iso = is_isomorphic(u24, u24);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(*iso, (Bijection{0, 1, 2, 3}));
}

TEST(IsomorphismTest, RelabelingEqualizesTables) {
  Matroid v = vamos_matroid();
  // Shuffle element order and check the search recovers a bijection.
  std::vector<std::size_t> perm = {5, 2, 7, 0, 3, 6, 1, 4};
  std::vector<std::string> names(8);
  for (std::size_t i = 0; i < 8; ++i) names[perm[i]] = "p" + std::to_string(i);
  auto target = std::make_shared<const GroundSet>(names);
  Matroid shuffled = relabel(v, perm, target);
  auto iso = is_isomorphic(v, shuffled);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(rank_table(relabel(v, *iso, shuffled.ground_ptr())),
            rank_table(shuffled));
  auto back = is_isomorphic(shuffled, v);
  ASSERT_TRUE(back.has_value());
}

TEST(IsomorphismTest, DistinguishesNonIsomorphic) {
  EXPECT_FALSE(is_isomorphic(uniform_matroid(2, 4), uniform_matroid(3, 4)));
  EXPECT_FALSE(is_isomorphic(uniform_matroid(2, 4), uniform_matroid(2, 5)));
  Matroid v = vamos_matroid();
  Matroid relaxed = relax(v, v.ground().subset({"a", "b", "c", "d"}));
  EXPECT_FALSE(is_isomorphic(v, relaxed));
}

TEST(IsomorphismTest, SymmetricOverCorpus) {
  const auto corpus = testing_corpus();
  for (const auto& a : corpus) {
    for (const auto& b : corpus) {
      auto ab = is_isomorphic(a, b);
      auto ba = is_isomorphic(b, a);
      ASSERT_EQ(ab.has_value(), ba.has_value());
      if (ab) {
        EXPECT_EQ(rank_table(relabel(a, *ab, b.ground_ptr())), rank_table(b));
      }
    }
  }
}

TEST(MinorTest, SmallCases) {
  EXPECT_TRUE(has_minor(uniform_matroid(2, 4), uniform_matroid(2, 4)));
  EXPECT_FALSE(has_minor(uniform_matroid(2, 4), uniform_matroid(3, 5)));
  EXPECT_TRUE(has_minor(uniform_matroid(3, 5), uniform_matroid(2, 4)));
  EXPECT_FALSE(has_minor(uniform_matroid(1, 3), uniform_matroid(2, 3)));
  EXPECT_TRUE(has_minor(vamos_matroid(), uniform_matroid(2, 4)));
  // A loop is needed to host U_{0,1}.
  EXPECT_FALSE(has_minor(free_matroid(3), uniform_matroid(0, 1)));
  EXPECT_TRUE(has_minor(uniform_matroid(1, 2), uniform_matroid(0, 1)));
}

TEST(MinorTest, WitnessReconstructsMinor) {
  Matroid host = uniform_matroid(3, 6);
  Matroid n = uniform_matroid(2, 4);
  auto w = find_minor(host, n);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(host.is_independent(w->contracted));
  EXPECT_FALSE(w->contracted.intersects(w->kept));
  for (std::uint64_t s = 0; s < 16; ++s) {
    Subset lifted = w->contracted;
    for (std::size_t i = 0; i < 4; ++i) {
      if (s >> i & 1) lifted.set(w->map[i]);
    }
    EXPECT_EQ(host.rank(lifted) - host.rank(w->contracted),
              n.rank(Subset::from_mask(4, s)));
  }
}

}  // namespace
}  // namespace mlogic
