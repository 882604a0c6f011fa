#include "gzwb/group_algebra.hpp"

#include <gtest/gtest.h>

using namespace gzwb;

namespace {

AlgebraElement el(const GroupPtr& G, std::initializer_list<std::pair<const char*, long>> terms)
{
  AlgebraElement a(G);
  for (const auto& [c, x] : terms) a += AlgebraElement::of(G, Permutation::parse_cycles(G->degree(), c), x);
  return a;
}

// Independent product: convolution over all pairs of group elements.
AlgebraElement naive_product(const AlgebraElement& a, const AlgebraElement& b)
{
  const auto& G = a.group();
  AlgebraElement r(G);
  for (Index x = 0; x < G->order(); ++x) {
    for (Index y = 0; y < G->order(); ++y) {
      Rational c = a.coefficient(x) * b.coefficient(y);
      if (c != 0) r += AlgebraElement::of(G, G->element(x) * G->element(y), c);
    }
  }
  return r;
}

} // namespace

TEST(GroupAlgebra, SmallProducts)
{
  auto S2 = symmetric_group(2);
  auto S3 = symmetric_group(3);
  auto e = el(S3, {{"()", 1}});
  auto a = el(S3, {{"(1 2)", 2}, {"(1 2 3)", -1}});
  EXPECT_EQ(e * a, a);
  EXPECT_EQ(el(S2, {{"(1 2)", 1}}) * el(S2, {{"(1 2)", 1}}), el(S2, {{"()", 1}}));
  EXPECT_TRUE((el(S2, {{"()", 1}, {"(1 2)", 1}}) * el(S2, {{"()", 1}, {"(1 2)", -1}})).is_zero());
}

TEST(GroupAlgebra, ProductMatchesConvolution)
{
  auto S4 = symmetric_group(4);
  std::mt19937_64 rng(11);
  for (int s = 0; s < 10; ++s) {
    auto a = random_element(S4, rng, 5);
    auto b = random_element(S4, rng, 5);
    EXPECT_EQ(a * b, naive_product(a, b));
  }
}

TEST(GroupAlgebra, Involution)
{
  auto S3 = symmetric_group(3);
  EXPECT_EQ(involute(el(S3, {{"()", 1}})), el(S3, {{"()", 1}}));
  EXPECT_EQ(involute(el(S3, {{"(1 2 3)", 1}})), el(S3, {{"(1 3 2)", 1}}));
  EXPECT_EQ(involute(el(S3, {{"()", 2}, {"(1 2 3)", 3}})), el(S3, {{"()", 2}, {"(1 3 2)", 3}}));
  std::mt19937_64 rng(5);
  for (int s = 0; s < 10; ++s) {
    auto a = random_element(S3, rng, 4);
    auto b = random_element(S3, rng, 4);
    EXPECT_EQ(involute(a * b), involute(b) * involute(a));
  }
}

TEST(GroupAlgebra, ClassSums)
{
  auto S3 = symmetric_group(3);
  auto t = el(S3, {{"(1 2)", 1}, {"(1 3)", 1}, {"(2 3)", 1}});
  bool found = false;
  for (const auto& z : class_sums(S3)) {
    found = found || z == t;
    for (const auto& g : S3->elements()) {
      auto x = AlgebraElement::of(S3, g);
      EXPECT_EQ(z * x, x * z);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(t * t, el(S3, {{"()", 3}, {"(1 2 3)", 3}, {"(1 3 2)", 3}}));
}

TEST(GroupAlgebra, RegularRepresentationAndPositivity)
{
  auto S3 = symmetric_group(3);
  auto S2 = symmetric_group(2);
  EXPECT_EQ(regular_representation(el(S3, {{"()", 1}})), RationalMatrix::identity(6));
  EXPECT_EQ(regular_trace(el(S3, {{"()", 1}, {"(1 2)", 5}})), Rational(6));
  EXPECT_TRUE(is_positive(el(S3, {{"()", 1}})));
  EXPECT_TRUE(is_positive(el(S2, {{"()", 1}, {"(1 2)", -1}})));
  EXPECT_FALSE(is_positive(el(S2, {{"(1 2)", 1}})));
  std::mt19937_64 rng(3);
  for (int s = 0; s < 5; ++s) {
    auto a = random_element(S3, rng, 3);
    EXPECT_TRUE(is_positive(a * involute(a)));
  }
}

TEST(GroupAlgebra, GeneratedSubalgebra)
{
  auto S2 = symmetric_group(2);
  auto S3 = symmetric_group(3);
  EXPECT_EQ(generated_subalgebra(S3, {}).dim(), 1u);
  EXPECT_EQ(generated_subalgebra(S3, class_sums(S3)).dim(), 3u);
  EXPECT_EQ(generated_subalgebra(S2, {el(S2, {{"(1 2)", 1}})}).dim(), 2u);
  EXPECT_EQ(generated_subalgebra(S3, {el(S3, {{"(1 2)", 1}}), el(S3, {{"(1 2 3)", 1}})}).dim(), 6u);
}

TEST(GroupAlgebra, CommutantOfGeneratorsIsCenter)
{
  for (int n = 2; n <= 4; ++n) {
    auto G = symmetric_group(n);
    std::vector<AlgebraElement> gens;
    for (Index g : G->generators()) gens.push_back(AlgebraElement::basis(G, g));
    EXPECT_EQ(commutant(G, gens).dim(), conjugacy_classes(*G).size());
  }
}

TEST(GroupAlgebra, EmbedRestrictTransfer)
{
  auto S3 = symmetric_group(3);
  auto S2 = symmetric_group(2);
  auto pair = make_pair(S3, S2);
  auto b = el(S2, {{"()", 1}, {"(1 2)", -3}});
  auto a = embed(*pair, b);
  EXPECT_EQ(a, el(S3, {{"()", 1}, {"(1 2)", -3}}));
  EXPECT_EQ(restrict_to_subgroup(*pair, a), b);
  EXPECT_THROW(restrict_to_subgroup(*pair, a + el(S3, {{"(1 3)", 7}})), std::invalid_argument);
  EXPECT_EQ(transfer(b, S3), a);
  EXPECT_EQ(transfer(a, symmetric_group(3)), a);
  EXPECT_THROW(transfer(el(S3, {{"(1 3)", 1}}), S2), std::out_of_range);
  EXPECT_THROW(static_cast<void>(el(S3, {{"()", 1}}) + el(S2, {{"()", 1}})), std::invalid_argument);
}
