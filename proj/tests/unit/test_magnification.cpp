#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "galcluster/constructions.hpp"
#include "galcluster/group_ops.hpp"
#include "galcluster/magnification.hpp"
#include "helpers.hpp"

using namespace galcluster;
using test::group;

namespace {

std::multiset<std::pair<std::uint64_t, std::uint64_t>> pair_orders(const std::vector<Decomposition>& ds) {
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& d : ds) out.emplace(d.a.order(), d.b.order());
  return out;
}

}  // namespace

TEST(Decompositions, CyclicSix) {
  EXPECT_EQ(pair_orders(enumerate_decompositions(test::cyclic(6))),
            (std::multiset<std::pair<std::uint64_t, std::uint64_t>>{{1, 6}, {2, 3}, {3, 2}, {6, 1}}));
}

TEST(Decompositions, CyclicFourIsIndecomposable) {
  EXPECT_EQ(pair_orders(enumerate_decompositions(test::cyclic(4))),
            (std::multiset<std::pair<std::uint64_t, std::uint64_t>>{{1, 4}, {4, 1}}));
}

TEST(Decompositions, AnSquareHasOnlyTheFactorPairs) {
  EXPECT_EQ(pair_orders(enumerate_decompositions(build_an_square(5).group())),
            (std::multiset<std::pair<std::uint64_t, std::uint64_t>>{{1, 3600}, {60, 60}, {60, 60}, {3600, 1}}));
}

TEST(ScmWitness, GaloisCyclicSix) {
  const auto m = build_cyclic_galois(6);
  const auto w = scm_witness(m);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, DecompositionWitness::Kind::kScm);
  EXPECT_EQ(w->a.order(), 3U);
  EXPECT_EQ(w->b.order(), 2U);
  EXPECT_TRUE(verify_witness(m, *w));
}

TEST(ScmWitness, BorelSevenTwo) {
  const auto m = build_borel(7, 2);
  const auto w = scm_witness(m);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(m, *w));
}

TEST(ScmWitness, AnSquareHasNone) { EXPECT_FALSE(scm_witness(build_an_square(5)).has_value()); }

TEST(IsPrimitive, GaloisExamples) {
  EXPECT_TRUE(is_primitive(build_cyclic_galois(9)));
  EXPECT_FALSE(is_primitive(build_cyclic_galois(15)));
  EXPECT_TRUE(is_primitive(build_semidirect(2, 3)));
}

TEST(IsPrimitive, KleinFourGaloisIsPrimitiveButNotGeneralPrimitive) {
  const auto v4 = group(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const ExtensionModel m(v4, PermGroup::trivial(4));
  EXPECT_TRUE(is_primitive(m));
  EXPECT_FALSE(is_general_primitive(m));
}

TEST(SgmWitness, AnSquareFactorPair) {
  const auto m = build_an_square(5);
  const auto w = sgm_witness(m);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->a.order(), 60U);
  EXPECT_EQ(w->b.order(), 60U);
  EXPECT_EQ(w->indices, (std::pair<std::uint64_t, std::uint64_t>{5, 5}));
  EXPECT_TRUE(verify_witness(m, *w));
}

TEST(SgmWitness, BorelSevenTwoHasTrivialHnB) {
  const auto m = build_borel(7, 2);
  const auto w = sgm_witness(m);
  ASSERT_TRUE(w.has_value());
  const bool one_side_trivial =
      intersection_order(m.subgroup(), w->a) == 1 || intersection_order(m.subgroup(), w->b) == 1;
  EXPECT_TRUE(one_side_trivial);
  EXPECT_TRUE(verify_witness(m, *w));
}

TEST(SgmWitness, DihedralHasNone) { EXPECT_FALSE(sgm_witness(build_dihedral4()).has_value()); }

TEST(IsGeneralPrimitive, Examples) {
  EXPECT_TRUE(is_general_primitive(build_psl2_max(7)));
  EXPECT_TRUE(is_general_primitive(build_borel(13, 3)));
  EXPECT_FALSE(is_general_primitive(build_borel(7, 2)));
}

TEST(QuickPrimitive, Examples) {
  EXPECT_EQ(quick_primitive_check(build_sn_tuple(5, 2)), QuickVerdict::kNoProperNormalContainsH);
  EXPECT_EQ(quick_primitive_check(build_cyclic_galois(6)), QuickVerdict::kSilent);
  EXPECT_EQ(quick_primitive_check(build_psl2_max(7)), QuickVerdict::kNoProperNormalContainsH);
}

TEST(QuickGeneralPrimitive, Examples) {
  EXPECT_EQ(quick_general_primitive_check(build_sn_tuple(4, 2)), QuickVerdict::kNormalsIntersect);
  EXPECT_EQ(quick_general_primitive_check(build_dihedral4()), QuickVerdict::kNormalsIntersect);
  EXPECT_EQ(quick_general_primitive_check(build_cyclic_galois(6)), QuickVerdict::kSilent);
  EXPECT_EQ(quick_general_primitive_check(build_psl2_max(7)), QuickVerdict::kFewNormalSubgroups);
}

TEST(VerifyWitness, RejectsTamperedWitness) {
  const auto m = build_cyclic_galois(6);
  auto w = *scm_witness(m);
  w.indices.first += 1;
  EXPECT_FALSE(verify_witness(m, w));
  auto swapped = *scm_witness(m);
  std::swap(swapped.a, swapped.b);
  EXPECT_FALSE(verify_witness(m, swapped));
}

TEST(CoincidenceClauses, SemidirectProduct) {
  const auto l = build_semidirect(2, 2);
  const auto j = build_semidirect(3, 2);
  ASSERT_TRUE(chains_coincide(product_model(l, j)).has_value());
  const auto c = coincidence_clauses(l, j);
  EXPECT_TRUE(c.l_primitive);
  EXPECT_TRUE(c.j_nontrivial_and_primitive);
  EXPECT_TRUE(c.any());
}

TEST(CoincidenceClauses, TrivialJIsNeverPrimitiveClause) {
  const auto s3 = test::symmetric(3);
  const auto c = coincidence_clauses(build_cyclic_galois(6), ExtensionModel(s3, s3));
  EXPECT_FALSE(c.j_nontrivial_and_primitive);
  EXPECT_FALSE(c.j_rigid_l_descends);
  EXPECT_FALSE(c.l_rigid_j_descends);
}
