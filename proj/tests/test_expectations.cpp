#include "gzwb/expectations.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gzwb;

namespace {

Permutation cyc(int n, const char* text) { return Permutation::parse_cycles(n, text); }

std::set<Permutation> as_set(const FiniteGroup& G, const std::vector<Index>& xs)
{
  std::set<Permutation> s;
  for (Index x : xs) s.insert(G.element(x));
  return s;
}

// Brute force over all subsets of G containing e with |G:H| elements:
// K must be invariant under H-conjugation and meet every left coset gH once.
std::size_t brute_force_vproj_count(const SubgroupPair& pair)
{
  const auto& G = pair.G();
  const std::size_t n = G.order(), k = pair.index();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1) || static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    auto in = [&](Index g) { return (mask >> g) & 1; };
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (Index h : pair.embedding()) {
        if (!in(G.multiply(G.multiply(h, x), G.inverse(h)))) ok = false;
      }
    }
    for (Index g = 0; g < n && ok; ++g) {
      int hits = 0;
      for (Index h : pair.embedding()) hits += in(G.multiply(g, h)) ? 1 : 0;
      ok = hits == 1;
    }
    if (ok) ++count;
  }
  return count;
}

AlgebraElement el(const GroupPtr& G, const char* c, long x = 1) { return AlgebraElement::of(G, cyc(G->degree(), c), x); }

} // namespace

TEST(VirtualProjections, CountsAgreeWithBruteForce)
{
  for (int n = 2; n <= 4; ++n) {
    auto pair = make_pair(symmetric_group(n), symmetric_group(n - 1));
    EXPECT_EQ(find_virtual_projections(pair).size(), brute_force_vproj_count(*pair)) << "n = " << n;
  }
  auto Q = group_by_name("Q8");
  for (const auto& members : all_subgroups(*Q)) {
    auto pair = make_pair(Q, subgroup_from_indices(*Q, members));
    EXPECT_EQ(find_virtual_projections(pair).size(), brute_force_vproj_count(*pair));
  }
}

TEST(VirtualProjections, S3HasTwoSolutions)
{
  auto pair = make_pair(symmetric_group(3), symmetric_group(2));
  std::set<std::set<Permutation>> got;
  for (const auto& vp : find_virtual_projections(pair)) got.insert(as_set(pair->G(), vp.K));
  std::set<std::set<Permutation>> want{{cyc(3, "()"), cyc(3, "(1 3)"), cyc(3, "(2 3)")},
                                       {cyc(3, "()"), cyc(3, "(1 2 3)"), cyc(3, "(1 3 2)")}};
  EXPECT_EQ(got, want);
}

TEST(VirtualProjections, S5IsUnique)
{
  auto pair = make_pair(symmetric_group(5), symmetric_group(4));
  auto vps = find_virtual_projections(pair);
  ASSERT_EQ(vps.size(), 1u);
  std::set<Permutation> want{Permutation::identity(5)};
  for (int i = 1; i < 5; ++i) want.insert(Permutation::transposition(5, i, 5));
  EXPECT_EQ(as_set(pair->G(), vps[0].K), want);
  const auto& G = pair->G();
  EXPECT_EQ(apply_virtual_projection(vps[0], cyc(5, "(1 5)")), Permutation::identity(5));
  EXPECT_EQ(apply_virtual_projection(vps[0], cyc(5, "(1 2)(3 4)")), cyc(5, "(1 2)(3 4)"));
  for (const auto& vp : vps) {
    EXPECT_TRUE(satisfies_projection_identities(vp));
    EXPECT_EQ(preimage_of_identity(vp.projection), vp.K);
  }
  EXPECT_EQ(G.order(), 120u);
}

TEST(VirtualProjections, DirectProductFactor)
{
  // S_2 x S_2 acting on {1,2} and {3,4}
  auto G = make_group(FiniteGroup::generated_by(4, {cyc(4, "(1 2)"), cyc(4, "(3 4)")}));
  auto H = make_group(FiniteGroup::generated_by(4, {cyc(4, "(1 2)")}));
  auto pair = make_pair(G, H);
  bool factor = false;
  for (const auto& vp : find_virtual_projections(pair)) {
    factor = factor || as_set(*G, vp.K) == std::set<Permutation>{cyc(4, "()"), cyc(4, "(3 4)")};
  }
  EXPECT_TRUE(factor);
}

TEST(VirtualProjections, TransversalDefects)
{
  auto pair = make_pair(symmetric_group(3), symmetric_group(2));
  const auto& G = pair->G();
  std::vector<Index> bad{0, G.index_of(cyc(3, "(1 3)")), G.index_of(cyc(3, "(1 2 3)"))};
  EXPECT_TRUE(transversal_defect(*pair, bad).has_value());
  EXPECT_THROW(make_virtual_projection(pair, bad), std::invalid_argument);
}

TEST(Expectations, LinearizedProjectionOnSumOfGroup)
{
  auto S3 = symmetric_group(3);
  auto pair = make_pair(S3, symmetric_group(2));
  AlgebraElement all(S3);
  for (const auto& g : S3->elements()) all += AlgebraElement::of(S3, g);
  for (const auto& vp : find_virtual_projections(pair)) {
    auto P = linearize(vp);
    EXPECT_EQ(P.apply(all), el(S3, "()", 3) + el(S3, "(1 2)", 3));
    EXPECT_EQ(P.apply(el(S3, "(1 2)")), el(S3, "(1 2)"));
  }
}

TEST(Expectations, PlancherelAxioms)
{
  auto pair = make_pair(symmetric_group(3), symmetric_group(2));
  auto rep = verify_axioms(plancherel_expectation(pair));
  EXPECT_TRUE(rep.projection_onto_B && rep.bimodule && rep.star_compatible && rep.unital && rep.positive);
  EXPECT_TRUE(rep.true_expectation());
  auto id = verify_axioms(identity_expectation(symmetric_group(3)));
  EXPECT_TRUE(id.true_expectation());
}

TEST(Expectations, StandardLinearizationIsNotPositive)
{
  auto pair = make_pair(symmetric_group(3), symmetric_group(2));
  const auto& G = pair->G();
  for (const auto& vp : find_virtual_projections(pair)) {
    auto P = linearize(vp);
    auto rep = verify_axioms(P);
    EXPECT_TRUE(rep.generalized());
    bool standard = as_set(G, vp.K) == std::set<Permutation>{cyc(3, "()"), cyc(3, "(1 3)"), cyc(3, "(2 3)")};
    if (standard) {
      EXPECT_FALSE(rep.positive);
      ASSERT_TRUE(rep.witness.has_value());
      auto image = P.apply(*rep.witness * involute(*rep.witness));
      EXPECT_FALSE(is_positive(restrict_to_subgroup(*pair, image)));
    } else {
      // K = A_3 makes p the sign homomorphism onto S_2, which is positive
      EXPECT_TRUE(rep.positive);
      for (Index g = 0; g < G.order(); ++g) {
        EXPECT_EQ(G.element(vp.projection[g]).sign(), 1 == G.element(g).sign() ? 1 : -1);
      }
    }
  }
}

TEST(Expectations, StarCompatibilityNeedsInverseClosedK)
{
  // C4 over its subgroup of order 2: K = {e, r} is not closed under inverses
  auto C4 = group_by_name("C4");
  auto r = cyc(4, "(1 2 3 4)");
  auto H = make_group(FiniteGroup::generated_by(4, {r * r}));
  auto pair = make_pair(C4, H);
  auto vps = find_virtual_projections(pair);
  ASSERT_EQ(vps.size(), 2u);
  for (const auto& vp : vps) {
    auto rep = verify_axioms(linearize(vp));
    EXPECT_TRUE(rep.projection_onto_B);
    EXPECT_TRUE(rep.bimodule);
    EXPECT_FALSE(rep.star_compatible);
  }
}

TEST(Expectations, CyclicPairWithoutPositiveSolution)
{
  // C8 over C4 has no complement, and no linearized projection is positive
  auto C8 = group_by_name("C8");
  auto r = cyc(8, "(1 2 3 4 5 6 7 8)");
  auto pair = make_pair(C8, make_group(FiniteGroup::generated_by(8, {r * r})));
  auto vps = find_virtual_projections(pair);
  EXPECT_FALSE(vps.empty());
  for (const auto& vp : vps) EXPECT_FALSE(verify_axioms(linearize(vp)).positive);

  // C6 over C3 has the complement C2, which gives a positive expectation
  auto C6 = group_by_name("C6");
  auto s = cyc(6, "(1 2 3 4 5 6)");
  auto pair6 = make_pair(C6, make_group(FiniteGroup::generated_by(6, {s * s})));
  bool positive = false;
  for (const auto& vp : find_virtual_projections(pair6)) positive = positive || verify_axioms(linearize(vp)).positive;
  EXPECT_TRUE(positive);
}

TEST(Expectations, KernelComplements)
{
  auto S3 = symmetric_group(3);
  auto pair = make_pair(S3, symmetric_group(2));
  auto pl = plancherel_expectation(pair);
  auto T = kernel_complement(pl);
  EXPECT_EQ(T.T.dim(), 4u);
  EXPECT_EQ(expectation_from_complement(T), pl);
  for (const auto& vp : find_virtual_projections(pair)) {
    auto P = linearize(vp);
    auto Tv = kernel_complement(P);
    EXPECT_EQ(Tv.T.dim(), 4u);
    EXPECT_EQ(expectation_from_complement(Tv), P);
  }
  EXPECT_EQ(kernel_complement(identity_expectation(S3)).T.dim(), 0u);

  // complementary to C(H), but (12) * (13) = (1 3 2) leaves the span
  auto bad = Subspace::span(6, {el(S3, "(1 3)").dense(), el(S3, "(2 3)").dense(), el(S3, "(1 2 3)").dense(),
                                (el(S3, "(1 3 2)") + el(S3, "(1 2)")).dense()});
  EXPECT_THROW(expectation_from_complement(pair, bad), std::invalid_argument);
}

TEST(Expectations, AffineMixtures)
{
  auto pair = make_pair(symmetric_group(3), symmetric_group(2));
  auto pl = plancherel_expectation(pair);
  auto vp = find_virtual_projections(pair).front();
  auto P = linearize(vp);
  EXPECT_EQ(convex_mix({Rational(1)}, {P}), P);
  EXPECT_EQ(convex_mix({Rational(2), Rational(-1)}, {P, P}), P);
  auto M = convex_mix({Rational(1, 2), Rational(1, 2)}, {pl, P});
  auto g = pair->G().index_of(cyc(3, "(1 3)"));
  auto expected = Rational(1, 2) * AlgebraElement::basis(pair->ambient(), vp.projection[g]);
  EXPECT_EQ(M.image(g), expected);
  EXPECT_THROW(convex_mix({Rational(1, 2)}, {pl}), std::invalid_argument);
}
