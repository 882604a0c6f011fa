#include "gzwb/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using gzwb::Permutation;

TEST(Permutation, ComposesRightFactorFirst)
{
  auto s = Permutation::transposition(3, 1, 2);
  auto t = Permutation::transposition(3, 2, 3);
  auto st = s * t;
  EXPECT_EQ(st(1), 2); // t fixes 1, s sends 1 to 2
  EXPECT_EQ(st(2), 3);
  EXPECT_EQ(st(3), 1);
  EXPECT_EQ(st, Permutation::parse_cycles(3, "(1 2 3)"));
}

TEST(Permutation, InverseAndIdentity)
{
  auto p = Permutation::parse_cycles(5, "(1 4 2)(3 5)");
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_TRUE((p.inverse() * p).is_identity());
  EXPECT_EQ(Permutation::parse_cycles(3, "(1 2 3)").inverse(), Permutation::parse_cycles(3, "(1 3 2)"));
}

TEST(Permutation, PaddingPreservesEquality)
{
  auto a = Permutation::transposition(2, 1, 2);
  auto b = Permutation::transposition(5, 1, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.padded(5), b);
  EXPECT_EQ(b.largest_moved_point(), 2);
  EXPECT_THROW(Permutation::parse_cycles(4, "(1 4)").padded(3), std::invalid_argument);
}

TEST(Permutation, CycleNotationRoundTrip)
{
  std::vector<int> images{1, 2, 3, 4, 5};
  do {
    Permutation p(images);
    EXPECT_EQ(Permutation::parse_cycles(5, p.cycle_notation()), p);
  } while (std::next_permutation(images.begin(), images.end()));
  EXPECT_EQ(Permutation::identity(3).cycle_notation(), "()");
}

TEST(Permutation, SignMatchesInversionCount)
{
  std::vector<int> images{1, 2, 3, 4};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (images[i] > images[j]) ++inversions;
    EXPECT_EQ(Permutation(images).sign(), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST(Permutation, CycleType)
{
  auto p = Permutation::parse_cycles(6, "(1 2 3)(4 5)");
  auto ct = p.cycle_type(6);
  EXPECT_EQ(ct, (std::vector<int>{3, 2, 1}));
}

TEST(Permutation, RejectsMalformedInput)
{
  EXPECT_THROW(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::parse_cycles(3, "(1 2 2)"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse_cycles(3, "(1 4)"), std::invalid_argument);
}
