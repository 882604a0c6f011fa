#include "gzwb/linear_algebra.hpp"

#include <gtest/gtest.h>

using namespace gzwb;

namespace {

RationalMatrix hilbert(std::size_t n)
{
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(1, static_cast<long>(i + j + 1));
  return m;
}

RationalVector vec(std::initializer_list<long> xs)
{
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

} // namespace

TEST(Rational, ParseAndPrint)
{
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(Rational(3, 2)), "3/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(LinearAlgebra, HilbertInverseIsExact)
{
  for (std::size_t n = 1; n <= 5; ++n) {
    auto h = hilbert(n);
    auto inv = inverse(h);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(h * *inv, RationalMatrix::identity(n));
  }
  EXPECT_EQ((*inverse(hilbert(3)))(0, 0), Rational(9));
}

TEST(LinearAlgebra, SingularMatrixHasNoInverse)
{
  auto m = RationalMatrix::from_flat(2, 2, vec({1, 2, 2, 4}));
  EXPECT_FALSE(inverse(m).has_value());
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0] + 2 * ns[0][1], Rational(0));
}

TEST(LinearAlgebra, SubspaceMembershipAndCoordinates)
{
  auto s = Subspace::span(3, {vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 2, 1})});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(vec({2, 3, 1})));
  EXPECT_FALSE(s.contains(vec({1, 0, 0})));
  auto c = s.coordinates(vec({2, 3, 1}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(s.combine(*c), vec({2, 3, 1}));
  EXPECT_EQ((s + Subspace::span(3, {vec({1, 0, 0})})).dim(), 3u);
  EXPECT_EQ(Subspace::span(3, {vec({1, 1, 0}), vec({0, 1, 1})}), s);
  EXPECT_TRUE(Subspace::whole(3).contains(s));
}

TEST(LinearAlgebra, LinearCombinationSolver)
{
  LinearCombinationSolver solver({vec({1, 0, 1}), vec({0, 1, 1})});
  auto x = solver.solve(vec({2, 3, 5}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, vec({2, 3}));
  EXPECT_FALSE(solver.solve(vec({1, 1, 1})).has_value());
}

TEST(LinearAlgebra, PositiveSemidefinite)
{
  EXPECT_TRUE(is_positive_semidefinite(RationalMatrix::from_flat(2, 2, vec({1, 1, 1, 1}))));
  EXPECT_FALSE(is_positive_semidefinite(RationalMatrix::from_flat(2, 2, vec({1, 2, 2, 1}))));
  EXPECT_TRUE(is_positive_semidefinite(hilbert(4)));
  EXPECT_FALSE(is_positive_semidefinite(RationalMatrix::from_flat(2, 2, vec({0, 1, 1, 0}))));
  EXPECT_TRUE(is_positive_semidefinite(RationalMatrix(3, 3)));
}

TEST(LinearAlgebra, TraceAndTranspose)
{
  auto m = RationalMatrix::from_flat(2, 3, vec({1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(m.transpose()(2, 1), Rational(6));
  EXPECT_EQ((m * m.transpose()).trace(), Rational(91));
}
