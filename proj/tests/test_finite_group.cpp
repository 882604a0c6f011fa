#include "gzwb/finite_group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace gzwb;

namespace {

// Brute force: the closure of {x} under conjugation by the whole group.
std::set<Index> conjugation_closure(const FiniteGroup& G, Index x)
{
  std::set<Index> orbit;
  for (Index g = 0; g < G.order(); ++g) orbit.insert(G.multiply(G.multiply(g, x), G.inverse(g)));
  return orbit;
}

std::size_t involutions_recurrence(int n)
{
  std::size_t a = 1, b = 1; // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    std::size_t c = b + static_cast<std::size_t>(k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

Permutation cyc(int n, const char* text) { return Permutation::parse_cycles(n, text); }

} // namespace

TEST(FiniteGroup, SymmetricChainOrders)
{
  auto chain = symmetric_chain(5);
  std::vector<std::size_t> orders;
  for (const auto& G : chain.groups()) orders.push_back(G->order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 6, 24, 120}));
  EXPECT_EQ(symmetric_chain(1).size(), 1u);
  // S_2 sits in S_3 as the stabilizer of 3
  for (const auto& h : chain.group(1)->elements()) EXPECT_EQ(h.padded(3)(3), 3);
}

TEST(FiniteGroup, InvolutionCountsMatchRecurrence)
{
  for (int n = 1; n <= 6; ++n) {
    auto G = symmetric_group(n);
    std::size_t count = 0;
    for (Index g = 0; g < G->order(); ++g) {
      if (G->multiply(g, g) == FiniteGroup::identity_index()) ++count;
    }
    EXPECT_EQ(count, involutions_recurrence(n)) << "n = " << n;
  }
}

TEST(FiniteGroup, ConjugacyClassesAgreeWithBruteForce)
{
  for (int n : {1, 3, 4}) {
    auto G = symmetric_group(n);
    auto classes = conjugacy_classes(*G);
    std::multiset<std::size_t> sizes;
    for (const auto& c : classes) {
      sizes.insert(c.members.size());
      std::set<Index> members(c.members.begin(), c.members.end());
      EXPECT_EQ(members, conjugation_closure(*G, c.members.front()));
    }
    if (n == 3) {
      EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 3, 2}));
    } else if (n == 4) {
      EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 6, 3, 8, 6}));
    } else {
      EXPECT_EQ(classes.size(), 1u);
    }
  }
}

TEST(FiniteGroup, LeftCosetsOfS2InS3)
{
  auto pair = make_pair(symmetric_group(3), symmetric_group(2));
  auto table = left_cosets(*pair);
  ASSERT_EQ(table.cosets.size(), 3u);
  std::set<std::set<Permutation>> got;
  for (const auto& c : table.cosets) {
    std::set<Permutation> s;
    for (Index g : c) s.insert(pair->G().element(g));
    got.insert(s);
  }
  std::set<std::set<Permutation>> want{
      {cyc(3, "()"), cyc(3, "(1 2)")},
      {cyc(3, "(1 3)"), cyc(3, "(1 2 3)")},
      {cyc(3, "(2 3)"), cyc(3, "(1 3 2)")},
  };
  EXPECT_EQ(got, want);
  EXPECT_EQ(left_cosets(*make_pair(symmetric_group(4), symmetric_group(3))).cosets.size(), 4u);
  EXPECT_EQ(left_cosets(*make_pair(symmetric_group(3), symmetric_group(3))).cosets.size(), 1u);
}

TEST(FiniteGroup, HConjugationOrbitsOfS3)
{
  auto pair = make_pair(symmetric_group(3), symmetric_group(2));
  std::set<std::set<Permutation>> got;
  for (const auto& o : h_conjugation_orbits(*pair)) {
    std::set<Permutation> s;
    for (Index g : o.members) s.insert(pair->G().element(g));
    got.insert(s);
  }
  std::set<std::set<Permutation>> want{
      {cyc(3, "()")}, {cyc(3, "(1 2)")}, {cyc(3, "(1 3)"), cyc(3, "(2 3)")}, {cyc(3, "(1 2 3)"), cyc(3, "(1 3 2)")}};
  EXPECT_EQ(got, want);
  auto trivial = make_pair(symmetric_group(3), symmetric_group(1));
  EXPECT_EQ(h_conjugation_orbits(*trivial).size(), 6u);
}

TEST(FiniteGroup, TranspositionsToTheLastLetterFormOneOrbit)
{
  auto pair = make_pair(symmetric_group(5), symmetric_group(4));
  std::set<Permutation> want;
  for (int i = 1; i < 5; ++i) want.insert(Permutation::transposition(5, i, 5));
  bool found = false;
  for (const auto& o : h_conjugation_orbits(*pair)) {
    std::set<Permutation> s;
    for (Index g : o.members) s.insert(pair->G().element(g));
    found = found || s == want;
  }
  EXPECT_TRUE(found);
}

TEST(FiniteGroup, VinbergSet)
{
  auto s3 = make_pair(symmetric_group(3), symmetric_group(2));
  std::set<Permutation> bar;
  for (Index k : vinberg_bar_K(*s3)) bar.insert(s3->G().element(k));
  for (const char* c : {"()", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"}) EXPECT_TRUE(bar.count(cyc(3, c))) << c;

  auto trivial = make_pair(symmetric_group(3), symmetric_group(1));
  EXPECT_EQ(vinberg_bar_K(*trivial).size(), 6u);

  auto s5 = make_pair(symmetric_group(5), symmetric_group(4));
  std::set<Permutation> bar5;
  for (Index k : vinberg_bar_K(*s5)) bar5.insert(s5->G().element(k));
  EXPECT_TRUE(bar5.count(Permutation::identity(5)));
  for (int i = 1; i < 5; ++i) EXPECT_TRUE(bar5.count(Permutation::transposition(5, i, 5)));
}

TEST(FiniteGroup, SubgroupsOfS4AreTwoGenerated)
{
  // every subgroup of S_4 is generated by at most two elements
  auto G = symmetric_group(4);
  std::set<std::vector<Permutation>> oracle;
  for (const auto& a : G->elements()) {
    for (const auto& b : G->elements()) {
      auto H = FiniteGroup::generated_by(4, {a, b});
      oracle.insert(H.elements());
    }
  }
  auto subs = all_subgroups(*G);
  EXPECT_EQ(subs.size(), oracle.size());
  EXPECT_EQ(subs.size(), 30u);
  EXPECT_EQ(all_subgroups(*symmetric_group(3)).size(), 6u);
}

TEST(FiniteGroup, Catalog)
{
  EXPECT_EQ(group_by_name("Q8")->order(), 8u);
  EXPECT_FALSE(group_by_name("Q8")->is_abelian());
  EXPECT_EQ(group_by_name("D4")->order(), 8u);
  EXPECT_EQ(group_by_name("A4")->order(), 12u);
  EXPECT_TRUE(group_by_name("C12")->is_abelian());
  EXPECT_TRUE(group_by_name("Z2xZ4")->is_abelian());
  EXPECT_EQ(group_by_name("V4")->order(), 4u);
  std::size_t q8_involutions = 0;
  auto Q = group_by_name("Q8");
  for (Index g = 1; g < Q->order(); ++g) q8_involutions += Q->multiply(g, g) == 0;
  EXPECT_EQ(q8_involutions, 1u);
  EXPECT_THROW(group_by_name("nope"), std::invalid_argument);
}

TEST(FiniteGroup, FromElementsValidatesClosure)
{
  EXPECT_THROW(FiniteGroup::from_elements(3, {cyc(3, "()"), cyc(3, "(1 2 3)")}), std::invalid_argument);
  auto A3 = FiniteGroup::from_elements(3, {cyc(3, "(1 3 2)"), cyc(3, "()"), cyc(3, "(1 2 3)")});
  EXPECT_EQ(A3.order(), 3u);
  EXPECT_TRUE(A3.element(0).is_identity());
}
