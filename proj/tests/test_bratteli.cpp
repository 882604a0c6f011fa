#include "gzwb/bratteli.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace gzwb;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

PathTableau path(const BratteliDiagram& d, const char* text) { return parse_path(d, text); }

} // namespace

TEST(YoungLattice, LevelsAndDimensions)
{
  auto Y = young_lattice(6);
  EXPECT_EQ(Y.depth(), 6u);
  EXPECT_EQ(Y.levels[2][0].label, "(2)");
  EXPECT_EQ(Y.levels[2][1].label, "(1,1)");
  EXPECT_EQ(Y.levels[2][0].dim, 1);
  for (std::size_t n = 0; n <= 6; ++n) {
    std::uint64_t squares = 0;
    for (const auto& v : Y.levels[n]) squares += static_cast<std::uint64_t>(v.dim * v.dim);
    EXPECT_EQ(squares, factorial(static_cast<int>(n)));
    // the number of paths of length n to v is dim v
    std::vector<long> counts(Y.width(n), 0);
    for (const auto& t : enumerate_paths(Y, n)) counts[t.end()]++;
    for (std::size_t v = 0; v < Y.width(n); ++v) EXPECT_EQ(counts[v], Y.levels[n][v].dim);
  }
  EXPECT_EQ(young_lattice(0).depth(), 0u);
}

TEST(YoungLattice, RejectsBrokenDiagrams)
{
  auto Y = young_lattice(3);
  Y.levels[3][0].dim = 2;
  EXPECT_THROW(Y.validate(), std::invalid_argument);
  auto Z = young_lattice(3);
  Z.transitions[1][0] = {0, 0};
  EXPECT_THROW(Z.validate(), std::invalid_argument);
}

TEST(Paths, ParseAndLabel)
{
  auto Y = young_lattice(4);
  auto t = path(Y, "(1)>(2)>(2,1)");
  EXPECT_EQ(t.length(), 3u);
  EXPECT_EQ(path_label(Y, t), "(1)>(2)>(2,1)");
  EXPECT_EQ(path_label(Y, PathTableau{}), "");
  EXPECT_THROW(path(Y, "(1)>(1,1)>(3)"), std::invalid_argument);
  EXPECT_THROW(path(Y, "(2)"), std::invalid_argument);
  EXPECT_EQ(enumerate_paths(Y, 0).size(), 1u);
}

TEST(Plancherel, CylinderMeasures)
{
  auto L = plancherel_system(young_lattice(4));
  EXPECT_TRUE(L.is_true());
  EXPECT_EQ(cylinder_measure(L, PathTableau{}), Rational(1));
  EXPECT_EQ(cylinder_measure(L, path(L.diagram, "(1)>(2)>(2,1)")), Rational(1, 3));
  // every path of length n ending at v has measure dim v / n!
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_paths(L.diagram, n)) {
      EXPECT_EQ(cylinder_measure(L, t), make_rational(L.diagram.levels[n][t.end()].dim, static_cast<std::int64_t>(factorial(static_cast<int>(n)))));
    }
  }
  auto marg = shape_marginals(L, 3);
  EXPECT_EQ(marg, (std::vector<Rational>{Rational(1, 6), Rational(2, 3), Rational(1, 6)}));
}

TEST(Plancherel, TransitionEntries)
{
  auto L = plancherel_system(young_lattice(3));
  EXPECT_EQ(L.at(1)(0, 0), Rational(1));
  EXPECT_EQ(L.at(2)(0, 0), Rational(1, 2));
  EXPECT_EQ(L.at(3)(0, 1), Rational(2, 3));
}

TEST(Sampling, DeterministicAndValid)
{
  auto L = plancherel_system(young_lattice(6));
  auto a = sample_path(L, 6, std::uint64_t{42});
  auto b = sample_path(L, 6, std::uint64_t{42});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(is_valid_path(L.diagram, a));
  EXPECT_EQ(a.length(), 6u);
  EXPECT_EQ(sample_path(L, 0, std::uint64_t{1}), PathTableau{});

  std::mt19937_64 rng(9);
  auto S = random_markov_system(young_lattice(3), rng, true);
  if (!S.is_true()) {
    EXPECT_THROW(sample_path(S, 3, std::uint64_t{1}), std::invalid_argument);
  }
}

TEST(Sampling, FrequenciesMatchPlancherel)
{
  auto L = plancherel_system(young_lattice(4));
  std::mt19937_64 rng(123);
  const int N = 20000;
  std::vector<int> hits(L.diagram.width(4), 0);
  for (int s = 0; s < N; ++s) hits[sample_path(L, 4, rng).end()]++;
  auto exact = shape_marginals(L, 4);
  for (std::size_t v = 0; v < hits.size(); ++v) {
    double p = exact[v].get_d();
    EXPECT_NEAR(hits[v] / double(N), p, 4 * std::sqrt(p * (1 - p) / N));
  }
}

TEST(Martingales, ConditionalStep)
{
  auto L = plancherel_system(young_lattice(3));
  PathFunction ones;
  for (const auto& t : enumerate_paths(L.diagram, 3)) ones[t] = 1;
  for (const auto& [t, x] : conditional_expectation_step(L, ones, 3)) EXPECT_EQ(x, Rational(1));

  PathFunction ind;
  for (const auto& t : enumerate_paths(L.diagram, 2)) ind[t] = L.diagram.levels[2][t.end()].label == "(2)" ? 1 : 0;
  auto f1 = conditional_expectation_step(L, ind, 2);
  ASSERT_EQ(f1.size(), 1u);
  EXPECT_EQ(f1.begin()->second, Rational(1, 2));
}

TEST(Martingales, FromTopAndPerturbation)
{
  std::mt19937_64 rng(4);
  auto L = random_markov_system(young_lattice(4), rng, true);
  PathFunction top;
  long k = 0;
  for (const auto& t : enumerate_paths(L.diagram, 4)) top[t] = Rational(k++ % 5 - 2);
  auto M = martingale_from_top(L, top, 4);
  EXPECT_TRUE(is_martingale(L, M));
  auto bad = M;
  bad.levels[3].begin()->second += 1;
  EXPECT_FALSE(is_martingale(L, bad));

  Martingale constant;
  for (std::size_t n = 0; n <= 4; ++n) {
    PathFunction f;
    for (const auto& t : enumerate_paths(L.diagram, n)) f[t] = 7;
    constant.levels.push_back(f);
  }
  EXPECT_TRUE(is_martingale(L, constant));
}

TEST(Towers, PlancherelAndVirtualProjection)
{
  auto chain = symmetric_chain(4);
  std::mt19937_64 rng(8);
  for (const auto& E : {plancherel_chain(chain), virtual_projection_chain(chain)}) {
    Tower ones;
    for (std::size_t n = 1; n <= 4; ++n) ones.elements.push_back(AlgebraElement::basis(chain.group(n - 1), 0));
    EXPECT_TRUE(tower_verify(E, ones));

    auto T = tower_from_top(E, random_element(chain.top(), rng, 6));
    EXPECT_TRUE(tower_verify(E, T));
    auto broken = T;
    broken.elements[1] += AlgebraElement::basis(chain.group(1), 1);
    EXPECT_FALSE(tower_verify(E, broken));

    EXPECT_EQ(tower_act(E, 2, AlgebraElement::basis(chain.group(1), 0), Side::left, T), T);
    for (std::size_t m = 1; m <= 4; ++m) {
      auto b = random_element(chain.group(m - 1), rng, 2);
      EXPECT_TRUE(tower_verify(E, tower_act(E, m, b, Side::left, T)));
      EXPECT_TRUE(tower_verify(E, tower_act(E, m, b, Side::right, T)));
    }
  }
}

TEST(Towers, GZTowersAreMartingales)
{
  auto chain = symmetric_chain(4);
  for (const auto& E : {plancherel_chain(chain), virtual_projection_chain(chain)}) {
    auto S = gz_path_system(E);
    std::mt19937_64 rng(6);
    AlgebraElement top(chain.top());
    for (const auto& b : gz_algebra(chain, 4).basis()) top += Rational(static_cast<long>(rng() % 9) - 4) * b;
    auto M = gz_tower_to_martingale(S, tower_from_top(E, top));
    EXPECT_TRUE(is_martingale(S.markov, M));

    Tower ones;
    for (std::size_t n = 1; n <= 4; ++n) ones.elements.push_back(AlgebraElement::basis(chain.group(n - 1), 0));
    auto C = gz_tower_to_martingale(S, ones);
    for (const auto& f : C.levels)
      for (const auto& [t, x] : f) EXPECT_EQ(x, Rational(1));
  }
  EXPECT_TRUE(gz_path_system(plancherel_chain(chain)).markov.is_true());
  EXPECT_FALSE(gz_path_system(virtual_projection_chain(chain)).markov.is_true());
}

TEST(Towers, PlancherelPathSystemMatchesYoungTransitions)
{
  // along the GZ tree the Plancherel weights are those of Young's lattice
  auto chain = symmetric_chain(4);
  auto S = gz_path_system(plancherel_chain(chain));
  auto Y = plancherel_system(young_lattice(4));
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto& below = S.bases[n - 2];
    const auto& here = S.bases[n - 1];
    for (std::size_t u = 0; u < below.size(); ++u) {
      for (std::size_t v = 0; v < here.size(); ++v) {
        if (S.markov.diagram.multiplicity(n, u, v) == 0) continue;
        auto yu = Y.diagram.index_of(n - 1, label(below[u].path.back()));
        auto yv = Y.diagram.index_of(n, label(here[v].path.back()));
        EXPECT_EQ(S.markov.at(n)(u, v), Y.at(n)(yu, yv));
      }
    }
  }
}

TEST(CenterMaps, PlancherelMapsCenterOntoCenter)
{
  EXPECT_TRUE(maps_center_onto_center(plancherel_expectation(make_pair(symmetric_group(4), symmetric_group(3)))));
}
