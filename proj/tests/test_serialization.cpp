#include "gzwb/serialization.hpp"

#include <gtest/gtest.h>

using namespace gzwb;

TEST(Serialization, Scalars)
{
  EXPECT_EQ(rational_to_json(Rational(-3, 4)), Json("-3/4"));
  EXPECT_EQ(rational_to_json(Rational(5)), Json("5"));
  EXPECT_EQ(rational_from_json(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json(2)), Rational(2));
  EXPECT_THROW(rational_from_json(Json(0.5)), std::invalid_argument);
  auto p = Permutation::parse_cycles(4, "(1 3)(2 4)");
  EXPECT_EQ(permutation_to_json(p), Json::parse("[3,4,1,2]"));
  EXPECT_EQ(permutation_from_json(permutation_to_json(p)), p);
}

TEST(Serialization, ElementsAndExpectations)
{
  auto S3 = symmetric_group(3);
  std::mt19937_64 rng(1);
  auto a = random_element(S3, rng, 4);
  EXPECT_EQ(element_from_json(element_to_json(a)), a);

  auto pair = make_pair(S3, symmetric_group(2));
  for (const auto& P : {plancherel_expectation(pair), linearize(find_virtual_projections(pair).back())}) {
    auto j = expectation_to_json(P);
    auto Q = expectation_from_json(Json::parse(j.dump()));
    EXPECT_EQ(Q, P);
    EXPECT_EQ(Q.name(), P.name());
  }
  auto j = expectation_to_json(plancherel_expectation(pair));
  j["images"].erase(0);
  EXPECT_THROW(expectation_from_json(j), std::invalid_argument);
}

TEST(Serialization, DiagramsRoundTrip)
{
  auto Y = young_lattice(4);
  EXPECT_EQ(diagram_from_json(Json::parse(diagram_to_json(Y).dump())), Y);
  auto emb = embedding_diagram_sym(4);
  auto back = embedding_from_json(embedding_to_json(emb));
  EXPECT_EQ(back.multiplicities, emb.multiplicities);
  EXPECT_EQ(back.lower.labels, emb.lower.labels);
  EXPECT_EQ(back.upper.blocks, emb.upper.blocks);
  auto e2 = embedding_diagram_sym(2);
  EXPECT_EQ(embedding_from_json(embedding_to_json(e2)).multiplicities, e2.multiplicities);
}

TEST(Serialization, PlancherelSystemEntries)
{
  auto j = markov_system_to_json(plancherel_system(young_lattice(3)));
  EXPECT_EQ(j.at("matrices")[0].at("()->(1)"), Json("1"));
  EXPECT_EQ(j.at("matrices")[1].at("(1)->(2)"), Json("1/2"));
  EXPECT_EQ(j.at("matrices")[2].at("(2)->(2,1)"), Json("2/3"));
  EXPECT_TRUE(j.at("true").get<bool>());
}

TEST(Serialization, SignedSystemRecordsFlag)
{
  std::mt19937_64 rng(3);
  MarkovSystem L;
  do L = random_markov_system(young_lattice(4), rng, true);
  while (L.is_true());
  auto j = markov_system_to_json(L);
  EXPECT_FALSE(j.at("true").get<bool>());
  EXPECT_EQ(markov_system_from_json(Json::parse(j.dump())), L);
  j["true"] = true;
  EXPECT_THROW(markov_system_from_json(j), std::invalid_argument);
}

TEST(Serialization, MarkovMatrices)
{
  auto cp = concrete_pair_sym(3);
  auto L = markov_from_expectation(cp, plancherel_expectation(cp.subgroup_pair));
  auto j = markov_matrix_to_json(L);
  EXPECT_EQ(j.at("entries").at(edge_key("(2)", "(3)")), Json("1/3"));
  EXPECT_EQ(markov_matrix_from_json(j), L);
  j["entries"][edge_key("(2)", "(1,1,1)")] = "1/2";
  EXPECT_THROW(markov_matrix_from_json(j), std::invalid_argument);
}

TEST(Serialization, MartingalesAndTowers)
{
  auto L = plancherel_system(young_lattice(3));
  PathFunction top;
  long k = 0;
  for (const auto& t : enumerate_paths(L.diagram, 3)) top[t] = make_rational(k++, 3);
  auto M = martingale_from_top(L, top, 3);
  auto back = martingale_from_json(L.diagram, Json::parse(martingale_to_json(L.diagram, M).dump()));
  EXPECT_EQ(back, M);

  auto E = plancherel_chain(symmetric_chain(3));
  std::mt19937_64 rng(2);
  auto T = tower_from_top(E, random_element(E.chain.top(), rng, 4));
  auto U = tower_from_json(Json::parse(tower_to_json(T).dump()));
  ASSERT_EQ(U.depth(), T.depth());
  for (std::size_t n = 1; n <= T.depth(); ++n) EXPECT_EQ(U.at(n), T.at(n));
}

TEST(Serialization, GZMartingaleLabelsRoundTrip)
{
  auto E = plancherel_chain(symmetric_chain(3));
  auto S = gz_path_system(E);
  AlgebraElement top(E.chain.top());
  for (const auto& b : gz_algebra(E.chain, 3).basis()) top += b;
  auto G = gz_tower_to_martingale(S, tower_from_top(E, top));
  auto j = Json::parse(martingale_to_json(S.markov.diagram, G).dump());
  EXPECT_EQ(martingale_from_json(S.markov.diagram, j), G);
}
