#ifndef GZWB_SERIALIZATION_HPP
#define GZWB_SERIALIZATION_HPP

#include "bratteli.hpp"
#include "expectations.hpp"
#include "group_algebra.hpp"
#include "semisimple_pairs.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzwb {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j)
{
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a string like \"p/q\" or an integer");
}

inline Json permutation_to_json(const Permutation& p) { return p.images(); }

inline Permutation permutation_from_json(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

// ---------------------------------------------------------------------------
// groups, elements, expectations

inline Json group_to_json(const FiniteGroup& G)
{
  Json elems = Json::array();
  for (const auto& g : G.elements()) elems.push_back(permutation_to_json(g.padded(G.degree())));
  return {{"name", G.name()}, {"degree", G.degree()}, {"elements", elems}};
}

inline GroupPtr group_from_json(const Json& j)
{
  std::vector<Permutation> elems;
  for (const auto& e : j.at("elements")) elems.push_back(permutation_from_json(e));
  return make_group(FiniteGroup::from_elements(j.at("degree").get<int>(), std::move(elems), j.value("name", "")));
}

inline Json terms_to_json(const AlgebraElement& a)
{
  Json terms = Json::array();
  const auto& G = *a.group();
  for (const auto& [g, c] : a.terms()) {
    terms.push_back({{"perm", permutation_to_json(G.element(g).padded(G.degree()))}, {"coef", rational_to_json(c)}});
  }
  return terms;
}

inline AlgebraElement terms_from_json(const GroupPtr& G, const Json& terms)
{
  AlgebraElement a(G);
  for (const auto& t : terms) a.add_term(G->index_of(permutation_from_json(t.at("perm"))), rational_from_json(t.at("coef")));
  return a;
}

inline Json element_to_json(const AlgebraElement& a)
{
  return {{"group", group_to_json(*a.group())}, {"terms", terms_to_json(a)}};
}

inline AlgebraElement element_from_json(const Json& j)
{
  return terms_from_json(group_from_json(j.at("group")), j.at("terms"));
}

/// Basis-image table: one entry per element of G.
inline Json expectation_to_json(const GeneralizedExpectation& P)
{
  const auto& G = P.pair()->G();
  Json images = Json::array();
  for (Index g = 0; g < G.order(); ++g) {
    images.push_back({{"perm", permutation_to_json(G.element(g).padded(G.degree()))}, {"image", terms_to_json(P.image(g))}});
  }
  return {{"name", P.name()}, {"ambient", group_to_json(G)}, {"subgroup", group_to_json(P.pair()->H())},
          {"images", images}};
}

inline GeneralizedExpectation expectation_from_json(const Json& j)
{
  auto G = group_from_json(j.at("ambient"));
  auto H = group_from_json(j.at("subgroup"));
  auto pair = make_pair(G, H);
  std::vector<AlgebraElement> images(G->order(), AlgebraElement(G));
  std::vector<bool> seen(G->order(), false);
  for (const auto& e : j.at("images")) {
    Index g = G->index_of(permutation_from_json(e.at("perm")));
    if (seen[g]) throw std::invalid_argument("duplicate image entry");
    seen[g] = true;
    images[g] = terms_from_json(G, e.at("image"));
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("expectation table misses a group element");
  }
  return GeneralizedExpectation(pair, std::move(images), j.value("name", ""));
}

// ---------------------------------------------------------------------------
// diagrams, Markov data, martingales, towers

inline Json diagram_to_json(const BratteliDiagram& d)
{
  Json levels = Json::array();
  for (const auto& lv : d.levels) {
    Json l = Json::array();
    for (const auto& v : lv) l.push_back({{"label", v.label}, {"dim", v.dim}});
    levels.push_back(l);
  }
  Json edges = Json::array();
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    Json e = Json::array();
    for (std::size_t u = 0; u < d.width(n - 1); ++u)
      for (std::size_t v = 0; v < d.width(n); ++v)
        if (int m = d.multiplicity(n, u, v)) e.push_back({d.levels[n - 1][u].label, d.levels[n][v].label, m});
    edges.push_back(e);
  }
  return {{"levels", levels}, {"edges", edges}};
}

/// Dims are taken as given; only the shape is validated.
inline BratteliDiagram diagram_from_json(const Json& j)
{
  BratteliDiagram d;
  for (const auto& lv : j.at("levels")) {
    std::vector<BratteliVertex> level;
    for (const auto& v : lv) level.push_back({v.at("label").get<std::string>(), v.at("dim").get<long>()});
    d.levels.push_back(std::move(level));
  }
  const auto& edges = j.at("edges");
  if (edges.size() != d.depth()) throw std::invalid_argument("one edge list per level transition");
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    std::vector<std::vector<int>> m(d.width(n - 1), std::vector<int>(d.width(n), 0));
    for (const auto& e : edges[n - 1]) {
      std::size_t u = d.index_of(n - 1, e.at(0).get<std::string>());
      std::size_t v = d.index_of(n, e.at(1).get<std::string>());
      m[u][v] = e.at(2).get<int>();
    }
    d.transitions.push_back(std::move(m));
  }
  d.validate(false);
  return d;
}

/// Two-level diagram: B blocks above, A blocks below.
inline Json embedding_to_json(const BipartiteEmbedding& emb)
{
  Json upper = Json::array(), lower = Json::array(), edges = Json::array();
  for (std::size_t i = 0; i < emb.upper.blocks.size(); ++i) upper.push_back({{"label", emb.upper.labels[i]}, {"dim", emb.upper.blocks[i]}});
  for (std::size_t j = 0; j < emb.lower.blocks.size(); ++j) lower.push_back({{"label", emb.lower.labels[j]}, {"dim", emb.lower.blocks[j]}});
  for (std::size_t i = 0; i < emb.upper.blocks.size(); ++i)
    for (std::size_t j = 0; j < emb.lower.blocks.size(); ++j)
      if (int m = emb.multiplicities[i][j]) edges.push_back({emb.upper.labels[i], emb.lower.labels[j], m});
  Json levels = Json::array();
  levels.push_back(upper);
  levels.push_back(lower);
  Json edge_lists = Json::array();
  edge_lists.push_back(edges);
  return {{"levels", levels}, {"edges", edge_lists}};
}

inline BipartiteEmbedding embedding_from_json(const Json& j)
{
  const auto& levels = j.at("levels");
  if (levels.size() != 2 || j.at("edges").size() != 1) throw std::invalid_argument("an embedding has exactly two levels");
  BipartiteEmbedding emb;
  for (const auto& v : levels[0]) {
    emb.upper.labels.push_back(v.at("label").get<std::string>());
    emb.upper.blocks.push_back(v.at("dim").get<int>());
  }
  for (const auto& v : levels[1]) {
    emb.lower.labels.push_back(v.at("label").get<std::string>());
    emb.lower.blocks.push_back(v.at("dim").get<int>());
  }
  emb.multiplicities.assign(emb.upper.blocks.size(), std::vector<int>(emb.lower.blocks.size(), 0));
  auto find = [](const std::vector<std::string>& labels, const std::string& s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw std::invalid_argument("unknown block " + s);
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (const auto& e : j.at("edges")[0]) {
    emb.multiplicities[find(emb.upper.labels, e.at(0))][find(emb.lower.labels, e.at(1))] = e.at(2).get<int>();
  }
  emb.validate();
  return emb;
}

inline std::string edge_key(const std::string& upper, const std::string& lower) { return upper + "->" + lower; }

inline Json markov_matrix_to_json(const GeneralizedMarkovMatrix& L)
{
  Json entries = Json::object();
  for (std::size_t i = 0; i < L.entries.rows(); ++i)
    for (std::size_t j = 0; j < L.entries.cols(); ++j)
      if (L.edges[i][j]) entries[edge_key(L.row_labels[i], L.col_labels[j])] = rational_to_json(L.entries(i, j));
  return {{"rows", L.row_labels}, {"cols", L.col_labels}, {"entries", entries}, {"true", L.is_true()}};
}

inline GeneralizedMarkovMatrix markov_matrix_from_json(const Json& j)
{
  GeneralizedMarkovMatrix L;
  L.row_labels = j.at("rows").get<std::vector<std::string>>();
  L.col_labels = j.at("cols").get<std::vector<std::string>>();
  L.entries = RationalMatrix(L.row_labels.size(), L.col_labels.size());
  L.edges.assign(L.row_labels.size(), std::vector<bool>(L.col_labels.size(), false));
  std::size_t used = 0;
  for (std::size_t i = 0; i < L.row_labels.size(); ++i) {
    for (std::size_t k = 0; k < L.col_labels.size(); ++k) {
      auto it = j.at("entries").find(edge_key(L.row_labels[i], L.col_labels[k]));
      if (it == j.at("entries").end()) continue;
      L.edges[i][k] = true;
      L.entries(i, k) = rational_from_json(*it);
      ++used;
    }
  }
  if (used != j.at("entries").size()) throw std::invalid_argument("Markov entry with unknown labels");
  L.validate();
  if (j.contains("true") && j.at("true").get<bool>() != L.is_true()) throw std::invalid_argument("\"true\" flag disagrees with the entries");
  return L;
}

inline Json markov_system_to_json(const MarkovSystem& L)
{
  Json matrices = Json::array();
  const auto& d = L.diagram;
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    Json m = Json::object();
    for (std::size_t u = 0; u < d.width(n - 1); ++u)
      for (std::size_t v = 0; v < d.width(n); ++v)
        if (d.multiplicity(n, u, v) > 0) m[edge_key(d.levels[n - 1][u].label, d.levels[n][v].label)] = rational_to_json(L.at(n)(u, v));
    matrices.push_back(m);
  }
  return {{"diagram", diagram_to_json(d)}, {"matrices", matrices}, {"true", L.is_true()}};
}

inline MarkovSystem markov_system_from_json(const Json& j)
{
  MarkovSystem L;
  L.diagram = diagram_from_json(j.at("diagram"));
  const auto& d = L.diagram;
  const auto& ms = j.at("matrices");
  if (ms.size() != d.depth()) throw std::invalid_argument("one Markov matrix per level transition");
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    RationalMatrix m(d.width(n - 1), d.width(n));
    std::size_t used = 0;
    for (std::size_t u = 0; u < d.width(n - 1); ++u) {
      for (std::size_t v = 0; v < d.width(n); ++v) {
        auto it = ms[n - 1].find(edge_key(d.levels[n - 1][u].label, d.levels[n][v].label));
        if (it == ms[n - 1].end()) continue;
        m(u, v) = rational_from_json(*it);
        ++used;
      }
    }
    if (used != ms[n - 1].size()) throw std::invalid_argument("Markov entry with unknown labels");
    L.matrices.push_back(std::move(m));
  }
  L.validate();
  if (j.contains("true") && j.at("true").get<bool>() != L.is_true()) throw std::invalid_argument("\"true\" flag disagrees with the entries");
  return L;
}

inline Json martingale_to_json(const BratteliDiagram& d, const Martingale& M)
{
  Json levels = Json::array();
  for (const auto& f : M.levels) {
    Json l = Json::object();
    for (const auto& [t, x] : f) l[path_label(d, t)] = rational_to_json(x);
    levels.push_back(l);
  }
  return {{"depth", M.depth()}, {"levels", levels}};
}

inline Martingale martingale_from_json(const BratteliDiagram& d, const Json& j)
{
  Martingale M;
  for (const auto& l : j.at("levels")) {
    PathFunction f;
    for (const auto& [key, x] : l.items()) f.emplace(parse_path(d, key), rational_from_json(x));
    M.levels.push_back(std::move(f));
  }
  if (M.depth() != j.at("depth").get<std::size_t>()) throw std::invalid_argument("martingale depth mismatch");
  return M;
}

inline Json tower_to_json(const Tower& T)
{
  Json elems = Json::array();
  for (const auto& a : T.elements) elems.push_back(element_to_json(a));
  return {{"elements", elems}};
}

inline Tower tower_from_json(const Json& j)
{
  Tower T;
  for (const auto& e : j.at("elements")) T.elements.push_back(element_from_json(e));
  return T;
}

} // namespace gzwb

#endif // GZWB_SERIALIZATION_HPP
