#include <gtest/gtest.h>

#include "galcluster/constructions.hpp"
#include "galcluster/errors.hpp"
#include "galcluster/group_ops.hpp"
#include "galcluster/magnification.hpp"

using namespace galcluster;

namespace {

ClusterInvariants inv(std::uint64_t n, std::uint64_t r, std::uint64_t s, std::uint64_t t, std::uint64_t u) {
  return {n, r, s, t, u};
}

}  // namespace

TEST(Semidirect, Examples) {
  EXPECT_EQ(invariants(build_semidirect(2, 3)), inv(6, 2, 3, 3, 2));
  EXPECT_EQ(invariants(build_semidirect(3, 2)), inv(6, 3, 2, 2, 3));
  EXPECT_THROW(build_semidirect(1, 3), DomainError);
  EXPECT_THROW(build_semidirect(2, 1), DomainError);
}

TEST(Semidirect, FaithfulTransitiveAndStabilizerFixesRPoints) {
  for (auto [r, s] : {std::pair{2U, 2U}, {2U, 3U}, {3U, 2U}, {3U, 3U}, {4U, 2U}, {4U, 3U}}) {
    const auto m = build_semidirect(r, s);
    std::uint64_t expected = s;
    for (unsigned i = 0; i < s; ++i) expected *= r;
    EXPECT_EQ(m.group().order(), expected);  // faithful
    EXPECT_EQ(m.group().degree(), r * s);
    EXPECT_TRUE(is_transitive(m.group()));
    EXPECT_EQ(fixed_points(point_stabilizer(m.group(), 0)).size(), r);
    EXPECT_EQ(core(m.rel()).order(), 1U);
  }
}

TEST(SnTuple, Examples) {
  EXPECT_EQ(invariants(build_sn_tuple(4, 2)), inv(12, 2, 6, 1, 12));
  EXPECT_EQ(invariants(build_sn_tuple(5, 1)), inv(5, 1, 5, 1, 5));
  EXPECT_EQ(invariants(build_sn_tuple(5, 3)), inv(60, 6, 10, 1, 60));
  EXPECT_THROW(build_sn_tuple(4, 3), DomainError);
  EXPECT_THROW(build_sn_tuple(2, 1), DomainError);
}

TEST(AltProduct, Examples) {
  const auto a41 = invariants(build_alt_product(4, 1));
  EXPECT_EQ(a41.n, 8U);
  EXPECT_EQ(a41.r, 2U);
  EXPECT_EQ(a41.s, 4U);
  const auto a52 = invariants(build_alt_product(5, 2));
  EXPECT_EQ(a52.n, 40U);
  EXPECT_EQ(a52.r, 4U);
  EXPECT_EQ(a52.s, 10U);
  EXPECT_THROW(build_alt_product(3, 3), DomainError);
}

// With k = n - k the normalizer of A_k x A_k is the wreath product
// S_k wr S_2, not S_k x S_k, so r doubles.
TEST(AltProduct, EqualBlocksDoubleTheClusterSize) {
  EXPECT_EQ(invariants(build_alt_product(6, 3)).r, 8U);
  EXPECT_EQ(invariants(build_alt_product(4, 2)).r, 24U);
}

TEST(Dihedral4, Example) {
  const auto m = build_dihedral4();
  EXPECT_EQ(invariants(m), inv(4, 2, 2, 2, 2));
  EXPECT_TRUE(is_general_primitive(m));
}

TEST(Psl2Max, Examples) {
  const auto p7 = invariants(build_psl2_max(7));
  EXPECT_EQ(p7.n, 24U);
  EXPECT_EQ(p7.r, 3U);
  const auto p5 = invariants(build_psl2_max(5));
  EXPECT_EQ(p5.n, 12U);
  EXPECT_EQ(p5.r, 2U);
  EXPECT_THROW(build_psl2_max(4), DomainError);
  EXPECT_THROW(build_psl2_max(3), DomainError);
}

TEST(Psl2Max, ProjectiveActionIsFaithful) {
  for (unsigned p : {5U, 7U, 11U}) {
    const auto m = build_psl2_max(p);
    EXPECT_EQ(m.group().order(), std::uint64_t{p} * (p - 1) * (p + 1) / 2);
    EXPECT_EQ(m.group().degree(), p + 1);
  }
}

TEST(Psl2BorelImage, Examples) {
  const auto m7 = build_psl2_borel_image(7, 3);
  EXPECT_EQ(invariants(m7).n, 24U);
  EXPECT_EQ(invariants(m7).r, 3U);
  EXPECT_EQ(m7.subgroup().order(), 7U);
  const auto m13 = build_psl2_borel_image(13, 3);
  EXPECT_EQ(m13.group().order(), 1092U);
  EXPECT_EQ(m13.subgroup().order(), 26U);
  EXPECT_EQ(invariants(m13).n, 42U);
  EXPECT_EQ(invariants(m13).r, 3U);
  EXPECT_THROW(build_psl2_borel_image(13, 4), DomainError);
  EXPECT_THROW(build_psl2_borel_image(13, 2), DomainError);
}

TEST(Borel, Examples) {
  const auto b13 = build_borel(13, 3);
  EXPECT_EQ(invariants(b13).n, 39U);
  EXPECT_EQ(invariants(b13).r, 3U);
  EXPECT_TRUE(is_general_primitive(b13));
  const auto b72 = build_borel(7, 2);
  EXPECT_EQ(invariants(b72).n, 14U);
  EXPECT_EQ(invariants(b72).r, 2U);
  EXPECT_FALSE(is_general_primitive(b72));
  EXPECT_FALSE(is_primitive(b72));
  const auto b71 = build_borel(7, 1);
  EXPECT_EQ(invariants(b71).n, 7U);
  EXPECT_EQ(invariants(b71).r, 1U);
  EXPECT_TRUE(is_general_primitive(b71));
}

TEST(Borel, VectorActionIsFaithful) {
  for (auto [p, r] : {std::pair{7U, 1U}, {7U, 2U}, {13U, 3U}, {11U, 2U}}) {
    EXPECT_EQ(build_borel(p, r).group().order(), std::uint64_t{p} * (p - 1));
  }
}

// H = <diag(c, 1/c)> has order k = (p-1)/r. For even k it contains the
// central element -I, so the core is {I, -I}; for odd k it is trivial.
TEST(Borel, CoreIsTrivialExactlyWhenTheTorusHasOddOrder) {
  for (auto [p, r] : {std::pair{7U, 1U}, {7U, 2U}, {13U, 3U}, {13U, 4U}, {11U, 2U}, {19U, 3U}}) {
    const unsigned k = (p - 1) / r;
    EXPECT_EQ(core(build_borel(p, r).rel()).order(), k % 2 == 0 ? 2U : 1U) << "p=" << p << " r=" << r;
  }
}

// Passing to the faithful quotient (G/core, H/core) changes no verdict.
TEST(Borel, FaithfulQuotientHasTheSameInvariantsAndVerdicts) {
  for (auto [p, r] : {std::pair{7U, 1U}, {13U, 2U}, {13U, 3U}, {19U, 3U}}) {
    const auto m = build_borel(p, r);
    const CosetAction action(m.rel());
    const ExtensionModel q(action.image(), action.image_of(m.subgroup()));
    EXPECT_EQ(q.group().order() * core(m.rel()).order(), m.group().order());
    EXPECT_EQ(invariants(q), invariants(m));
    EXPECT_EQ(is_primitive(q), is_primitive(m));
    EXPECT_EQ(is_general_primitive(q), is_general_primitive(m));
  }
}

TEST(Borel, RejectsBadParameters) {
  EXPECT_THROW(build_borel(9, 2), DomainError);
  EXPECT_THROW(build_borel(7, 4), DomainError);
  EXPECT_THROW(build_borel(7, 3), DomainError);  // p - 1 = 2r
  EXPECT_THROW(build_borel(2, 1), DomainError);
}

TEST(CyclicGalois, Examples) {
  EXPECT_EQ(invariants(build_cyclic_galois(9)), inv(9, 9, 1, 9, 1));
  EXPECT_TRUE(is_primitive(build_cyclic_galois(9)));
  EXPECT_FALSE(is_primitive(build_cyclic_galois(6)));
  EXPECT_FALSE(is_primitive(build_cyclic_galois(15)));
  EXPECT_THROW(build_cyclic_galois(1), DomainError);
}

TEST(AnSquare, Examples) {
  const auto m = build_an_square(5);
  EXPECT_TRUE(is_primitive(m));
  EXPECT_FALSE(is_general_primitive(m));
  EXPECT_EQ(invariants(m).n, 25U);
  EXPECT_THROW(build_an_square(4), DomainError);
}

TEST(Caps, BuildersRespectElementCap) {
  Limits small;
  small.element_cap = 1000;
  EXPECT_THROW(build_sn_tuple(7, 2, small), CapExceeded);
  EXPECT_THROW(build_an_square(5, small), CapExceeded);
  EXPECT_THROW(build_psl2_max(13, small), CapExceeded);
}

TEST(NumberTheory, PrimesAndPrimitiveRoots) {
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(smallest_primitive_root(7), 3U);
  EXPECT_EQ(smallest_primitive_root(13), 2U);
  EXPECT_EQ(smallest_primitive_root(23), 5U);
  EXPECT_THROW(smallest_primitive_root(8), DomainError);
}

TEST(FamilySyntax, ParseAndFormat) {
  EXPECT_EQ(format_family(parse_family("semidirect r=2 s=3")), "semidirect r=2 s=3");
  EXPECT_EQ(format_family(parse_family("family=borel p=7 r=2")), "borel p=7 r=2");
  EXPECT_EQ(format_family(parse_family("  dihedral4 ")), "dihedral4");
  EXPECT_EQ(family_name(parse_family("psl2_borel_image r=3 p=7")), "psl2_borel_image");
  EXPECT_THROW(parse_family(""), ParseError);
  EXPECT_THROW(parse_family("octahedral n=3"), ParseError);
  EXPECT_THROW(parse_family("borel p=7"), ParseError);
  EXPECT_THROW(parse_family("borel p=7 r=x"), ParseError);
  EXPECT_THROW(parse_family("borel p=7 r=2 q=1"), ParseError);
  EXPECT_THROW(parse_family("borel p=7 r=2 r=2"), ParseError);
  EXPECT_THROW(parse_family("borel p=7 r=-2"), ParseError);
}

TEST(FamilySyntax, BuildDispatchesOnFamily) {
  EXPECT_EQ(invariants(build(parse_family("semidirect r=3 s=2"))), invariants(build_semidirect(3, 2)));
  EXPECT_THROW(build(parse_family("borel p=7 r=3")), DomainError);
}
