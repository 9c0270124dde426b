#include <gtest/gtest.h>

#include <random>

#include "galcluster/errors.hpp"
#include "galcluster/permutation.hpp"
#include "helpers.hpp"

using galcluster::compose;
using galcluster::DomainError;
using galcluster::format_cycles;
using galcluster::ParseError;
using galcluster::Permutation;
using test::perm;

TEST(Permutation, ParsesFourCycle) {
  const auto p = perm("(1 2 3 4)", 4);
  EXPECT_EQ(p[0], 1U);
  EXPECT_EQ(p[1], 2U);
  EXPECT_EQ(p[2], 3U);
  EXPECT_EQ(p[3], 0U);
}

TEST(Permutation, EmptyCycleIsIdentity) {
  EXPECT_TRUE(perm("()", 3).is_identity());
  EXPECT_TRUE(perm("", 3).is_identity());
  EXPECT_EQ(perm("()", 3).degree(), 3U);
}

TEST(Permutation, RejectsRepeatedPoint) { EXPECT_THROW(perm("(1 2)(1 3)", 3), ParseError); }

TEST(Permutation, RejectsMalformedInput) {
  EXPECT_THROW(perm("(1 4)", 3), ParseError);
  EXPECT_THROW(perm("(0 1)", 3), ParseError);
  EXPECT_THROW(perm("(1 2", 3), ParseError);
  EXPECT_THROW(perm("1 2)", 3), ParseError);
  EXPECT_THROW(perm("(1 x)", 3), ParseError);
  EXPECT_THROW(perm("(1 (2))", 3), ParseError);
}

TEST(Permutation, AcceptsCommasAndSingletons) {
  EXPECT_EQ(perm("(1,2,3)", 3), perm("(1 2 3)", 3));
  EXPECT_EQ(perm("(1)(2 3)", 3), perm("(2 3)", 3));
}

TEST(Permutation, ComposeIsRightToLeft) {
  EXPECT_EQ(compose(perm("(1 2)", 3), perm("(2 3)", 3)), perm("(1 2 3)", 3));
}

TEST(Permutation, ComposeWithIdentityAndInvolution) {
  const auto q = perm("(1 3 2)", 3);
  EXPECT_EQ(compose(Permutation(3), q), q);
  EXPECT_TRUE(compose(perm("(1 2)", 3), perm("(1 2)", 3)).is_identity());
}

TEST(Permutation, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(perm("(1 2)", 2), perm("(1 2)", 3)), DomainError);
}

TEST(Permutation, FromImagesValidates) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), DomainError);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), DomainError);
  EXPECT_NO_THROW(Permutation::from_images({2, 0, 1}));
}

TEST(Permutation, CanonicalFormat) {
  EXPECT_EQ(format_cycles(perm("(4 5)(3 1 2)", 6)), "(1 2 3)(4 5)");
  EXPECT_EQ(format_cycles(Permutation(4)), "()");
}

TEST(Permutation, OrderingIsLexicographicOnImages) {
  EXPECT_LT(Permutation(3), perm("(2 3)", 3));
  EXPECT_LT(perm("(2 3)", 3), perm("(1 2)", 3));
  EXPECT_LT(Permutation(2), Permutation(3));
}

TEST(PermutationProperty, FormatParseRoundTripAndInverse) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<galcluster::Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<galcluster::Point>(i);
    std::shuffle(images.begin(), images.end(), rng);
    const auto p = Permutation::from_images(images);
    EXPECT_EQ(galcluster::parse_permutation(format_cycles(p), n), p);
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_TRUE(compose(p.inverse(), p).is_identity());
  }
}

TEST(PermutationProperty, CompositionIsAssociative) {
  std::mt19937 rng(11);
  auto random_perm = [&](std::size_t n) {
    std::vector<galcluster::Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<galcluster::Point>(i);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(images);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto a = random_perm(n);
    const auto b = random_perm(n);
    const auto c = random_perm(n);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}
