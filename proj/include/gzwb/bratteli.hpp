#ifndef GZWB_BRATTELI_HPP
#define GZWB_BRATTELI_HPP

#include "expectations.hpp"
#include "gz_algebras.hpp"
#include "partitions.hpp"
#include "semisimple_pairs.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzwb {

// ---------------------------------------------------------------------------
// graded graphs

struct BratteliVertex
{
  std::string label;
  long dim = 1;

  friend bool operator==(const BratteliVertex&, const BratteliVertex&) = default;
};

/// levels[0] is the single root vertex; transitions[n - 1][u][v] is the
/// multiplicity of the edge from vertex u of level n - 1 to vertex v of level n.
struct BratteliDiagram
{
  std::vector<std::vector<BratteliVertex>> levels;
  std::vector<std::vector<std::vector<int>>> transitions;

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  std::size_t width(std::size_t n) const { return levels.at(n).size(); }
  int multiplicity(std::size_t n, std::size_t u, std::size_t v) const { return transitions.at(n - 1).at(u).at(v); }

  std::size_t index_of(std::size_t n, const std::string& label) const
  {
    const auto& lv = levels.at(n);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      if (lv[i].label == label) return i;
    }
    throw std::invalid_argument("no vertex " + label + " at level " + std::to_string(n));
  }

  /// Shape and edge checks; with check_dims also the recurrence
  /// d(v) = sum_u m(u, v) d(u).
  void validate(bool check_dims = true) const
  {
    if (levels.empty() || levels[0].size() != 1) throw std::invalid_argument("level 0 must hold exactly one vertex");
    if (levels[0][0].dim != 1) throw std::invalid_argument("root vertex must have dim 1");
    if (transitions.size() != depth()) throw std::invalid_argument("one multiplicity matrix per level transition");
    for (std::size_t n = 1; n <= depth(); ++n) {
      const auto& m = transitions[n - 1];
      if (m.size() != width(n - 1)) throw std::invalid_argument("multiplicity rows do not match level " + std::to_string(n - 1));
      for (std::size_t u = 0; u < m.size(); ++u) {
        if (m[u].size() != width(n)) throw std::invalid_argument("multiplicity columns do not match level " + std::to_string(n));
        bool any = false;
        for (int x : m[u]) {
          if (x < 0) throw std::invalid_argument("negative multiplicity");
          any = any || x > 0;
        }
        if (!any) throw std::invalid_argument("vertex " + levels[n - 1][u].label + " has no edge upward");
      }
      for (std::size_t v = 0; v < width(n); ++v) {
        long d = 0;
        bool reached = false;
        for (std::size_t u = 0; u < width(n - 1); ++u) {
          d += m[u][v] * levels[n - 1][u].dim;
          reached = reached || m[u][v] > 0;
        }
        if (!reached) throw std::invalid_argument("vertex " + levels[n][v].label + " is not reached from below");
        if (check_dims && d != levels[n][v].dim) {
          throw std::invalid_argument("dimension recurrence fails at " + levels[n][v].label);
        }
      }
    }
  }

  friend bool operator==(const BratteliDiagram&, const BratteliDiagram&) = default;
};

/// Young's lattice truncated at level n; dims are path counts, cross-checked
/// against the hook length formula.
inline BratteliDiagram young_lattice(int n)
{
  if (n < 0 || n > 8) throw std::invalid_argument("young_lattice: n must be in 0..8");
  BratteliDiagram d;
  std::vector<std::vector<Partition>> shapes{{Partition{}}};
  d.levels.push_back({{label(Partition{}), 1}});
  for (int k = 1; k <= n; ++k) {
    shapes.push_back(partitions_of(k));
    const auto& below = shapes[static_cast<std::size_t>(k - 1)];
    const auto& here = shapes[static_cast<std::size_t>(k)];
    std::vector<std::vector<int>> m(below.size(), std::vector<int>(here.size(), 0));
    std::vector<BratteliVertex> level;
    for (std::size_t v = 0; v < here.size(); ++v) {
      long dim = 0;
      for (std::size_t u = 0; u < below.size(); ++u) {
        if (contained_with_one_box(below[u], here[v])) {
          m[u][v] = 1;
          dim += d.levels.back()[u].dim;
        }
      }
      if (static_cast<std::uint64_t>(dim) != hook_length_dimension(here[v])) {
        throw std::logic_error("path count disagrees with the hook length formula at " + label(here[v]));
      }
      level.push_back({label(here[v]), dim});
    }
    d.levels.push_back(std::move(level));
    d.transitions.push_back(std::move(m));
  }
  d.validate();
  return d;
}

/// Maximal path prefix: vertices[k] is a vertex index at level k, vertices[0] = 0.
struct PathTableau
{
  std::vector<std::size_t> vertices{0};

  std::size_t length() const { return vertices.size() - 1; }
  std::size_t end() const { return vertices.back(); }

  PathTableau extended(std::size_t v) const
  {
    PathTableau t = *this;
    t.vertices.push_back(v);
    return t;
  }

  PathTableau parent() const
  {
    if (vertices.size() < 2) throw std::invalid_argument("the empty path has no parent");
    PathTableau t = *this;
    t.vertices.pop_back();
    return t;
  }

  friend auto operator<=>(const PathTableau&, const PathTableau&) = default;
};

inline bool is_valid_path(const BratteliDiagram& d, const PathTableau& t)
{
  if (t.vertices.empty() || t.vertices[0] != 0 || t.length() > d.depth()) return false;
  for (std::size_t k = 1; k <= t.length(); ++k) {
    if (t.vertices[k] >= d.width(k) || d.multiplicity(k, t.vertices[k - 1], t.vertices[k]) == 0) return false;
  }
  return true;
}

/// Labels joined by '>', starting at level 1; the empty path is "".
inline std::string path_label(const BratteliDiagram& d, const PathTableau& t)
{
  std::string s;
  for (std::size_t k = 1; k < t.vertices.size(); ++k) {
    if (k > 1) s += '>';
    s += d.levels[k].at(t.vertices[k]).label;
  }
  return s;
}

inline PathTableau parse_path(const BratteliDiagram& d, const std::string& text)
{
  PathTableau t;
  std::size_t start = 0;
  std::size_t level = 1;
  while (start < text.size()) {
    std::size_t stop = text.find('>', start);
    if (stop == std::string::npos) stop = text.size();
    if (level > d.depth()) throw std::invalid_argument("path is longer than the diagram: " + text);
    t.vertices.push_back(d.index_of(level, text.substr(start, stop - start)));
    start = stop + 1;
    ++level;
  }
  if (!is_valid_path(d, t)) throw std::invalid_argument("not a path of the diagram: " + text);
  return t;
}

/// All paths of length n, in depth-first order of vertex indices.
inline std::vector<PathTableau> enumerate_paths(const BratteliDiagram& d, std::size_t n)
{
  if (n > d.depth()) throw std::invalid_argument("enumerate_paths: level beyond the diagram");
  std::vector<PathTableau> frontier{PathTableau{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<PathTableau> next;
    for (const auto& t : frontier) {
      for (std::size_t v = 0; v < d.width(k); ++v) {
        if (d.multiplicity(k, t.end(), v) > 0) next.push_back(t.extended(v));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

// ---------------------------------------------------------------------------
// Markov systems and measures

/// matrices[n - 1] holds the transition from level n - 1 to level n, rows
/// indexed by level n - 1 and summing to 1.
struct MarkovSystem
{
  BratteliDiagram diagram;
  std::vector<RationalMatrix> matrices;

  const RationalMatrix& at(std::size_t n) const { return matrices.at(n - 1); }

  bool is_true() const
  {
    for (const auto& m : matrices)
      for (const auto& x : m.flat())
        if (sgn(x) < 0) return false;
    return true;
  }

  void validate() const
  {
    diagram.validate(false);
    if (matrices.size() != diagram.depth()) throw std::invalid_argument("one Markov matrix per level transition");
    for (std::size_t n = 1; n <= diagram.depth(); ++n) {
      const auto& m = at(n);
      if (m.rows() != diagram.width(n - 1) || m.cols() != diagram.width(n)) {
        throw std::invalid_argument("Markov matrix shape mismatch at level " + std::to_string(n));
      }
      for (std::size_t u = 0; u < m.rows(); ++u) {
        Rational s = 0;
        for (std::size_t v = 0; v < m.cols(); ++v) {
          if (diagram.multiplicity(n, u, v) == 0 && sgn(m(u, v)) != 0) {
            throw std::invalid_argument("Markov weight off the diagram at level " + std::to_string(n));
          }
          s += m(u, v);
        }
        if (s != 1) {
          throw std::invalid_argument("Markov row " + diagram.levels[n - 1][u].label + " sums to " + s.get_str());
        }
      }
    }
  }

  friend bool operator==(const MarkovSystem& a, const MarkovSystem& b)
  {
    return a.diagram == b.diagram && a.matrices == b.matrices;
  }
};

/// Lambda_n[u, v] = m(u, v) dim v / sum_w m(u, w) dim w; on Young's lattice
/// this is dim(lambda) / (n dim(mu)).
inline MarkovSystem plancherel_system(const BratteliDiagram& d)
{
  d.validate();
  MarkovSystem L;
  L.diagram = d;
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    RationalMatrix m(d.width(n - 1), d.width(n));
    for (std::size_t u = 0; u < m.rows(); ++u) {
      long total = 0;
      for (std::size_t v = 0; v < m.cols(); ++v) total += d.multiplicity(n, u, v) * d.levels[n][v].dim;
      for (std::size_t v = 0; v < m.cols(); ++v) {
        m(u, v) = make_rational(d.multiplicity(n, u, v) * d.levels[n][v].dim, total);
      }
    }
    L.matrices.push_back(std::move(m));
  }
  return L;
}

/// Random rows on the edges; signed rows take entries in [-2, 2].
inline MarkovSystem random_markov_system(const BratteliDiagram& d, std::mt19937_64& rng, bool signed_entries)
{
  d.validate(false);
  MarkovSystem L;
  L.diagram = d;
  for (std::size_t n = 1; n <= d.depth(); ++n) {
    RationalMatrix m(d.width(n - 1), d.width(n));
    for (std::size_t u = 0; u < m.rows(); ++u) {
      std::vector<std::size_t> cols;
      for (std::size_t v = 0; v < m.cols(); ++v) if (d.multiplicity(n, u, v) > 0) cols.push_back(v);
      auto row = random_stochastic_row(cols.size(), rng, signed_entries);
      for (std::size_t k = 0; k < cols.size(); ++k) m(u, cols[k]) = row[k];
    }
    L.matrices.push_back(std::move(m));
  }
  return L;
}

/// prod_k Lambda_k[v_{k-1}, v_k]; a signed set function for signed systems.
inline Rational cylinder_measure(const MarkovSystem& L, const PathTableau& t)
{
  if (!is_valid_path(L.diagram, t)) throw std::invalid_argument("cylinder_measure: not a path of the diagram");
  Rational p = 1;
  for (std::size_t k = 1; k <= t.length(); ++k) p *= L.at(k)(t.vertices[k - 1], t.vertices[k]);
  return p;
}

/// Sum of cylinder measures of the level-n paths ending at each vertex.
inline std::vector<Rational> shape_marginals(const MarkovSystem& L, std::size_t n)
{
  std::vector<Rational> out(L.diagram.width(n));
  for (const auto& t : enumerate_paths(L.diagram, n)) out[t.end()] += cylinder_measure(L, t);
  return out;
}

/// Seeded simulation of the Markov measure. Each step draws a uniform
/// 64-bit integer r and compares r / 2^64 exactly against the cumulative row.
inline PathTableau sample_path(const MarkovSystem& L, std::size_t depth, std::mt19937_64& rng)
{
  if (!L.is_true()) throw std::invalid_argument("sampling needs a nonnegative Markov system");
  if (depth > L.diagram.depth()) throw std::invalid_argument("sample depth beyond the diagram");
  static const mpz_class two64 = mpz_class(1) << 64;
  PathTableau t;
  Rational u;
  for (std::size_t k = 1; k <= depth; ++k) {
    std::uint64_t r = rng();
    mpz_class num;
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
    u = Rational(num, two64);
    const auto& m = L.at(k);
    Rational cum = 0;
    std::size_t pick = m.cols();
    std::size_t last = m.cols();
    for (std::size_t v = 0; v < m.cols(); ++v) {
      if (sgn(m(t.end(), v)) == 0) continue;
      last = v;
      cum += m(t.end(), v);
      if (u < cum) {
        pick = v;
        break;
      }
    }
    t.vertices.push_back(pick == m.cols() ? last : pick);
  }
  return t;
}

inline PathTableau sample_path(const MarkovSystem& L, std::size_t depth, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  return sample_path(L, depth, rng);
}

/// A function on the level-n paths.
using PathFunction = std::map<PathTableau, Rational>;

/// f_{n-1}(t) = sum_v Lambda_n[end(t), v] f_n(t v).
inline PathFunction conditional_expectation_step(const MarkovSystem& L, const PathFunction& f_n, std::size_t n)
{
  if (n < 1 || n > L.diagram.depth()) throw std::invalid_argument("conditional_expectation_step: bad level");
  PathFunction out;
  for (const auto& t : enumerate_paths(L.diagram, n - 1)) {
    Rational s = 0;
    for (std::size_t v = 0; v < L.diagram.width(n); ++v) {
      if (L.diagram.multiplicity(n, t.end(), v) == 0) continue;
      auto it = f_n.find(t.extended(v));
      if (it == f_n.end()) throw std::invalid_argument("f_n is not defined on every level-n path");
      s += L.at(n)(t.end(), v) * it->second;
    }
    out.emplace(t, s);
  }
  return out;
}

/// levels[n] is f_n on the paths of length n.
struct Martingale
{
  std::vector<PathFunction> levels;

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }

  friend bool operator==(const Martingale&, const Martingale&) = default;
};

inline bool is_martingale(const MarkovSystem& L, const Martingale& M)
{
  if (M.levels.empty() || M.depth() > L.diagram.depth()) return false;
  for (std::size_t n = 0; n <= M.depth(); ++n) {
    if (M.levels[n].size() != enumerate_paths(L.diagram, n).size()) return false;
  }
  for (std::size_t n = M.depth(); n >= 1; --n) {
    if (conditional_expectation_step(L, M.levels[n], n) != M.levels[n - 1]) return false;
  }
  return true;
}

/// The martingale whose top level is f_N.
inline Martingale martingale_from_top(const MarkovSystem& L, const PathFunction& f_N, std::size_t N)
{
  Martingale M;
  M.levels.assign(N + 1, {});
  M.levels[N] = f_N;
  for (std::size_t n = N; n >= 1; --n) M.levels[n - 1] = conditional_expectation_step(L, M.levels[n], n);
  return M;
}

// ---------------------------------------------------------------------------
// towers over a chain of expectations

/// steps[n - 2] maps C(G_n) to C(G_{n-1}) for n = 2..depth.
struct ExpectationChain
{
  GroupChain chain;
  std::vector<GeneralizedExpectation> steps;

  std::size_t depth() const { return chain.size(); }
  const GeneralizedExpectation& at(std::size_t n) const { return steps.at(n - 2); }

  /// P_n(a) as an element of C(G_{n-1}).
  AlgebraElement apply(std::size_t n, const AlgebraElement& a) const
  {
    return transfer(at(n).apply_to_subgroup(transfer(a, chain.group(n - 1))), chain.group(n - 2));
  }
};

inline ExpectationChain plancherel_chain(const GroupChain& chain)
{
  ExpectationChain E{chain, {}};
  for (std::size_t n = 2; n <= chain.size(); ++n) E.steps.push_back(plancherel_expectation(chain.step(n - 1)));
  return E;
}

/// Linearized virtual projections, taking the lightest transversal per level.
inline ExpectationChain virtual_projection_chain(const GroupChain& chain)
{
  ExpectationChain E{chain, {}};
  for (std::size_t n = 2; n <= chain.size(); ++n) {
    const auto& pair = chain.step(n - 1);
    auto vps = find_virtual_projections(pair);
    if (vps.empty()) throw std::runtime_error("no virtual projection at level " + std::to_string(n));
    std::size_t best = 0;
    for (std::size_t i = 1; i < vps.size(); ++i) {
      if (transversal_weight(pair->G(), vps[i].K) < transversal_weight(pair->G(), vps[best].K)) best = i;
    }
    E.steps.push_back(linearize(vps[best]));
  }
  return E;
}

/// Expectations on the symmetric chain built from one Markov matrix per level;
/// Ls[n - 2] is used for the step from S_n to S_{n-1}.
inline ExpectationChain markov_chain_sym(int N, const std::vector<GeneralizedMarkovMatrix>& Ls)
{
  if (Ls.size() + 1 != static_cast<std::size_t>(N)) throw std::invalid_argument("one Markov matrix per step");
  auto chain = symmetric_chain(N);
  ExpectationChain E{chain, {}};
  for (int n = 2; n <= N; ++n) {
    auto cp = concrete_pair_sym(n);
    auto P = expectation_from_markov(cp, Ls[static_cast<std::size_t>(n - 2)]);
    std::vector<AlgebraElement> images;
    const auto& pair = chain.step(static_cast<std::size_t>(n - 1));
    for (Index g = 0; g < pair->G().order(); ++g) {
      images.push_back(transfer(P.apply(AlgebraElement::of(cp.group, pair->G().element(g))), pair->ambient()));
    }
    E.steps.emplace_back(pair, std::move(images), "markov");
  }
  return E;
}

/// elements[n - 1] lives in C(G_n).
struct Tower
{
  std::vector<AlgebraElement> elements;

  std::size_t depth() const { return elements.size(); }
  const AlgebraElement& at(std::size_t n) const { return elements.at(n - 1); }

  friend bool operator==(const Tower&, const Tower&) = default;
};

/// The tower determined by its top element.
inline Tower tower_from_top(const ExpectationChain& E, const AlgebraElement& top)
{
  const std::size_t N = E.depth();
  Tower T;
  T.elements.assign(N, AlgebraElement(E.chain.group(0)));
  T.elements[N - 1] = transfer(top, E.chain.group(N - 1));
  for (std::size_t n = N; n >= 2; --n) T.elements[n - 2] = E.apply(n, T.elements[n - 1]);
  return T;
}

inline bool tower_verify(const ExpectationChain& E, const Tower& T)
{
  if (T.depth() != E.depth()) return false;
  for (std::size_t n = 2; n <= T.depth(); ++n) {
    if (!(E.apply(n, T.at(n)) == T.at(n - 1))) return false;
  }
  return true;
}

enum class Side { left, right };

/// b in C(G_m) acts on components n >= m; lower components are regenerated.
/// Throws if the result is not a tower, which signals a failure of the
/// bimodule property.
inline Tower tower_act(const ExpectationChain& E, std::size_t m, const AlgebraElement& b, Side side, const Tower& T)
{
  if (m < 1 || m > T.depth() || T.depth() != E.depth()) throw std::invalid_argument("tower_act: level out of range");
  transfer(b, E.chain.group(m - 1)); // b must live in C(G_m)
  Tower R = T;
  for (std::size_t n = m; n <= T.depth(); ++n) {
    AlgebraElement bn = transfer(b, E.chain.group(n - 1));
    R.elements[n - 1] = side == Side::left ? bn * T.at(n) : T.at(n) * bn;
  }
  for (std::size_t n = m; n >= 2; --n) R.elements[n - 2] = E.apply(n, R.elements[n - 1]);
  if (!tower_verify(E, R)) throw std::runtime_error("tower action broke the tower: the expectations are not bimodule maps");
  return R;
}

/// P(center of C(G)) equals the center of C(H).
inline bool maps_center_onto_center(const GeneralizedExpectation& P)
{
  const auto& pair = *P.pair();
  const std::size_t n = pair.G().order();
  std::vector<RationalVector> centre_H;
  for (const auto& z : class_sums(pair.subgroup())) centre_H.push_back(embed(pair, z).dense());
  Subspace target = Subspace::span(n, centre_H);
  std::vector<RationalVector> images;
  for (const auto& z : class_sums(pair.ambient())) images.push_back(P.apply(z).dense());
  return Subspace::span(n, images) == target;
}

// ---------------------------------------------------------------------------
// GZ towers and martingales on the symmetric chain

inline std::string gz_path_label(const std::vector<Partition>& path)
{
  std::string s;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) s += '/';
    s += label(path[k]);
  }
  return s;
}

/// GZ_{n-1} in GZ_n inside C(S_n): blocks are the GZ idempotents, an edge
/// joins t' to t when t extends t'.
inline ConcretePair gz_concrete_pair(const std::vector<GZBasisVector>& below, const std::vector<GZBasisVector>& here,
                                     const GroupPtr& Sn)
{
  BipartiteEmbedding emb;
  std::vector<AlgebraElement> lower, upper;
  for (const auto& t : below) {
    emb.upper.blocks.push_back(1);
    emb.upper.labels.push_back(gz_path_label(t.path));
    upper.push_back(transfer(t.idempotent, Sn));
  }
  for (const auto& t : here) {
    emb.lower.blocks.push_back(1);
    emb.lower.labels.push_back(gz_path_label(t.path));
    lower.push_back(transfer(t.idempotent, Sn));
  }
  for (const auto& s : below) {
    std::vector<int> row;
    for (const auto& t : here) {
      bool prefix = t.path.size() == s.path.size() + 1 && std::equal(s.path.begin(), s.path.end(), t.path.begin());
      row.push_back(prefix ? 1 : 0);
    }
    emb.multiplicities.push_back(std::move(row));
  }
  return make_concrete_pair(Sn, lower, upper, lower, upper, std::move(emb));
}

/// Tree of GZ paths (vertex = Young path) with the Markov system extracted
/// from the expectations restricted to GZ_{n-1} in GZ_n.
struct GZPathSystem
{
  std::vector<std::vector<GZBasisVector>> bases; ///< bases[n - 1] for level n
  MarkovSystem markov;                           ///< over the path tree
};

inline GZPathSystem gz_path_system(const ExpectationChain& E)
{
  const std::size_t N = E.depth();
  if (N < 1 || N > 5) throw std::invalid_argument("gz_path_system: depth must be in 1..5");
  GZPathSystem S;
  BratteliDiagram& tree = S.markov.diagram;
  tree.levels.push_back({{"()", 1}});
  for (std::size_t n = 1; n <= N; ++n) {
    S.bases.push_back(gz_basis(gz_algebra(E.chain, static_cast<int>(n)), static_cast<int>(n)));
    std::vector<BratteliVertex> level;
    for (const auto& t : S.bases.back()) level.push_back({gz_path_label(t.path), 1});
    tree.levels.push_back(std::move(level));
  }
  tree.transitions.push_back({std::vector<int>(1, 1)});
  S.markov.matrices.push_back(RationalMatrix::identity(1));
  for (std::size_t n = 2; n <= N; ++n) {
    auto cp = gz_concrete_pair(S.bases[n - 2], S.bases[n - 1], E.chain.group(n - 1));
    tree.transitions.push_back(cp.embedding.multiplicities);
    const auto& P = E.at(n);
    auto L = markov_from_expectation(cp, [&P](const AlgebraElement& a) { return P.apply(a); });
    S.markov.matrices.push_back(L.entries);
  }
  tree.validate();
  S.markov.validate();
  return S;
}

/// Coordinates of a in the GZ basis; throws if a is not in their span.
inline std::vector<Rational> gz_coordinates(const std::vector<GZBasisVector>& basis, const AlgebraElement& a)
{
  std::vector<Rational> f;
  AlgebraElement rebuilt(a.group());
  for (const auto& t : basis) {
    AlgebraElement e = transfer(t.idempotent, a.group());
    AlgebraElement ae = a * e;
    Index probe = e.terms().begin()->first;
    Rational x = ae.coefficient(probe) / e.coefficient(probe);
    f.push_back(x);
    rebuilt += x * e;
  }
  if (!(rebuilt == a)) throw std::invalid_argument("element is not in the GZ algebra");
  return f;
}

/// f_n(t) is the eigenvalue of a_n on the GZ idempotent e_t; f_0 = f_1.
inline Martingale gz_tower_to_martingale(const GZPathSystem& S, const Tower& T)
{
  const std::size_t N = S.bases.size();
  if (T.depth() != N) throw std::invalid_argument("tower depth does not match the GZ path system");
  Martingale M;
  M.levels.assign(N + 1, {});
  for (std::size_t n = 1; n <= N; ++n) {
    auto f = gz_coordinates(S.bases[n - 1], T.at(n));
    // vertex v of level n in the tree is the path ending at basis vector v
    for (std::size_t v = 0; v < f.size(); ++v) {
      PathTableau t;
      for (std::size_t k = 1; k < n; ++k) {
        const auto& prefix = S.bases[n - 1][v].path;
        std::vector<Partition> head(prefix.begin(), prefix.begin() + static_cast<long>(k));
        t.vertices.push_back(S.markov.diagram.index_of(k, gz_path_label(head)));
      }
      t.vertices.push_back(v);
      M.levels[n].emplace(std::move(t), f[v]);
    }
  }
  M.levels[0].emplace(PathTableau{}, M.levels[1].begin()->second);
  return M;
}

} // namespace gzwb

#endif // GZWB_BRATTELI_HPP
