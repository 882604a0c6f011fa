#ifndef GZWB_SEMISIMPLE_PAIRS_HPP
#define GZWB_SEMISIMPLE_PAIRS_HPP

#include "expectations.hpp"
#include "finite_group.hpp"
#include "group_algebra.hpp"
#include "linear_algebra.hpp"
#include "partitions.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzwb {

// ---------------------------------------------------------------------------
// block algebras and their inclusion diagrams

/// Direct sum of full matrix algebras M_{k_1} + ... + M_{k_m}.
struct BlockAlgebra
{
  std::vector<int> blocks;
  std::vector<std::string> labels;

  long dimension() const
  {
    long d = 0;
    for (int k : blocks) d += static_cast<long>(k) * k;
    return d;
  }

  void validate() const
  {
    if (blocks.empty()) throw std::invalid_argument("block algebra needs at least one block");
    for (int k : blocks) {
      if (k <= 0) throw std::invalid_argument("block sizes must be positive");
    }
    if (!labels.empty() && labels.size() != blocks.size()) throw std::invalid_argument("one label per block");
  }
};

/// Inclusion B in A: upper vertices are the blocks of B, lower the blocks of
/// A; multiplicities[i][j] copies of B_i sit inside A_j.
struct BipartiteEmbedding
{
  BlockAlgebra upper; // B
  BlockAlgebra lower; // A
  std::vector<std::vector<int>> multiplicities;

  void validate() const
  {
    upper.validate();
    lower.validate();
    if (multiplicities.size() != upper.blocks.size()) throw std::invalid_argument("one multiplicity row per B block");
    for (const auto& row : multiplicities) {
      if (row.size() != lower.blocks.size()) throw std::invalid_argument("one multiplicity column per A block");
      for (int m : row) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
      }
    }
    for (std::size_t j = 0; j < lower.blocks.size(); ++j) {
      if (load(j) > lower.blocks[j]) throw std::invalid_argument("B blocks do not fit into A block " + std::to_string(j));
    }
  }

  long load(std::size_t j) const
  {
    long s = 0;
    for (std::size_t i = 0; i < upper.blocks.size(); ++i) s += static_cast<long>(multiplicities[i][j]) * upper.blocks[i];
    return s;
  }

  bool unital() const
  {
    for (std::size_t j = 0; j < lower.blocks.size(); ++j) {
      if (load(j) != lower.blocks[j]) return false;
    }
    return true;
  }

  bool simple_spectrum() const
  {
    for (const auto& row : multiplicities)
      for (int m : row)
        if (m > 1) return false;
    return true;
  }

  bool is_edge(std::size_t i, std::size_t j) const { return multiplicities[i][j] > 0; }
};

/// Rows indexed by B blocks, columns by A blocks, supported on edges,
/// every row summing to 1.
struct GeneralizedMarkovMatrix
{
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<bool>> edges;
  RationalMatrix entries;

  bool is_true() const
  {
    for (std::size_t i = 0; i < entries.rows(); ++i)
      for (std::size_t j = 0; j < entries.cols(); ++j)
        if (sgn(entries(i, j)) < 0) return false;
    return true;
  }

  void validate() const
  {
    for (std::size_t i = 0; i < entries.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < entries.cols(); ++j) {
        if (!edges[i][j] && sgn(entries(i, j)) != 0) {
          throw std::invalid_argument("Markov entry off the diagram at (" + row_labels[i] + ", " + col_labels[j] + ")");
        }
        s += entries(i, j);
      }
      if (s != 1) throw std::invalid_argument("Markov row " + row_labels[i] + " sums to " + s.get_str());
    }
  }

  friend bool operator==(const GeneralizedMarkovMatrix& a, const GeneralizedMarkovMatrix& b)
  {
    return a.row_labels == b.row_labels && a.col_labels == b.col_labels && a.entries == b.entries;
  }
};

inline GeneralizedMarkovMatrix markov_template(const BipartiteEmbedding& emb)
{
  GeneralizedMarkovMatrix L;
  L.row_labels = emb.upper.labels;
  L.col_labels = emb.lower.labels;
  L.entries = RationalMatrix(emb.upper.blocks.size(), emb.lower.blocks.size());
  L.edges.assign(emb.upper.blocks.size(), std::vector<bool>(emb.lower.blocks.size(), false));
  for (std::size_t i = 0; i < emb.upper.blocks.size(); ++i)
    for (std::size_t j = 0; j < emb.lower.blocks.size(); ++j) L.edges[i][j] = emb.is_edge(i, j);
  return L;
}

/// k random rationals summing to 1. Signed rows take free entries in
/// [-2, 2]; otherwise the row is a random probability vector.
inline std::vector<Rational> random_stochastic_row(std::size_t k, std::mt19937_64& rng, bool signed_entries)
{
  if (k == 0) throw std::invalid_argument("random_stochastic_row: empty row");
  std::uniform_int_distribution<int> num(signed_entries ? -10 : 1, 10);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> row(k);
  if (signed_entries) {
    Rational rest = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      row[i] = make_rational(num(rng), 5 * den(rng));
      rest -= row[i];
    }
    row[k - 1] = rest;
  } else {
    Rational total = 0;
    for (auto& x : row) {
      x = make_rational(num(rng), den(rng));
      total += x;
    }
    for (auto& x : row) x /= total;
  }
  return row;
}

inline GeneralizedMarkovMatrix random_markov(const BipartiteEmbedding& emb, std::mt19937_64& rng, bool signed_entries)
{
  GeneralizedMarkovMatrix L = markov_template(emb);
  for (std::size_t i = 0; i < L.entries.rows(); ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < L.entries.cols(); ++j) if (L.edges[i][j]) cols.push_back(j);
    if (cols.empty()) throw std::invalid_argument("B block without an edge");
    auto row = random_stochastic_row(cols.size(), rng, signed_entries);
    for (std::size_t k = 0; k < cols.size(); ++k) L.entries(i, cols[k]) = row[k];
  }
  return L;
}

// ---------------------------------------------------------------------------
// symmetric groups: characters and central idempotents

inline Partition cycle_type_partition(const Permutation& g, int n)
{
  return g.cycle_type(n);
}

/// z_lambda = (dim lambda / n!) sum_g chi_lambda(g) g, one per partition of n,
/// in the order of partitions_of(n).
inline std::vector<AlgebraElement> central_idempotents_sym(const GroupPtr& Sn, int n)
{
  if (n < 1 || n > 6) throw std::invalid_argument("central_idempotents_sym: n must be in 1..6");
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
  if (Sn->order() != fact) throw std::invalid_argument("group is not S_n");
  std::vector<AlgebraElement> out;
  std::vector<Partition> types;
  for (Index g = 0; g < Sn->order(); ++g) types.push_back(cycle_type_partition(Sn->element(g), n));
  for (const auto& lambda : partitions_of(n)) {
    Rational scale = make_rational(static_cast<std::int64_t>(hook_length_dimension(lambda)),
                                   static_cast<std::int64_t>(fact));
    std::map<Partition, long> chi;
    AlgebraElement z(Sn);
    for (Index g = 0; g < Sn->order(); ++g) {
      auto it = chi.find(types[g]);
      if (it == chi.end()) it = chi.emplace(types[g], mn_character(lambda, types[g])).first;
      // chi(g^-1) = chi(g) in S_n
      z.set(g, scale * Rational(it->second));
    }
    out.push_back(std::move(z));
  }
  return out;
}

inline std::vector<AlgebraElement> central_idempotents_sym(int n)
{
  return central_idempotents_sym(symmetric_group(n), n);
}

/// <Res chi_lambda, chi_mu> over S_{n-1}, from class sums of cycle types.
inline long restriction_multiplicity(const Partition& lambda, const Partition& mu)
{
  const int m = size_of(mu);
  mpz_class total = 0;
  for (const auto& rho : partitions_of(m)) {
    Partition rho1 = rho;
    rho1.push_back(1);
    total += class_size(rho) * mn_character(lambda, rho1) * mn_character(mu, rho);
  }
  mpz_class fact = 1;
  for (int k = 2; k <= m; ++k) fact *= k;
  if (total % fact != 0) throw std::logic_error("restriction multiplicity is not an integer");
  mpz_class q = total / fact;
  return q.get_si();
}

/// Inclusion diagram of C(S_{n-1}) in C(S_n), multiplicities from characters.
inline BipartiteEmbedding embedding_diagram_sym(int n)
{
  if (n < 2 || n > 6) throw std::invalid_argument("embedding_diagram_sym: n must be in 2..6");
  BipartiteEmbedding emb;
  auto upper = partitions_of(n - 1);
  auto lower = partitions_of(n);
  for (const auto& mu : upper) {
    emb.upper.blocks.push_back(static_cast<int>(hook_length_dimension(mu)));
    emb.upper.labels.push_back(label(mu));
  }
  for (const auto& lambda : lower) {
    emb.lower.blocks.push_back(static_cast<int>(hook_length_dimension(lambda)));
    emb.lower.labels.push_back(label(lambda));
  }
  for (const auto& mu : upper) {
    std::vector<int> row;
    for (const auto& lambda : lower) {
      long m = restriction_multiplicity(lambda, mu);
      if ((m == 1) != contained_with_one_box(mu, lambda) || m < 0 || m > 1) {
        throw std::logic_error("character branching disagrees with the add-a-box rule at " + label(mu) + " -> " +
                               label(lambda));
      }
      row.push_back(static_cast<int>(m));
    }
    emb.multiplicities.push_back(std::move(row));
  }
  emb.validate();
  return emb;
}

// ---------------------------------------------------------------------------
// concrete pairs inside a group algebra

/// A pair B in A realized inside C(G) through central idempotents.
///
/// For group pairs A = C(G) and B = C(H); for Gelfand-Tsetlin pairs A and B
/// are abelian subalgebras and the blocks are their minimal idempotents.
struct ConcretePair
{
  GroupPtr group;
  PairPtr subgroup_pair;                     ///< set iff A = C(G), B = C(H)
  std::vector<AlgebraElement> domain_basis;  ///< basis of A
  std::vector<AlgebraElement> a_blocks;      ///< z_j^A
  std::vector<AlgebraElement> b_blocks;      ///< z_i^B
  BipartiteEmbedding embedding;              ///< labels, block sizes, multiplicities
  std::vector<std::vector<AlgebraElement>> corners;           ///< p_ij = z_i^B z_j^A
  std::vector<std::vector<AlgebraElement>> b_block_basis;     ///< basis of z_i^B B
  std::vector<std::vector<LinearCombinationSolver>> lifts;    ///< solves z_j^A b = c for b in B_i
};

namespace detail {

inline void finish_concrete_pair(ConcretePair& cp, const std::vector<AlgebraElement>& target_basis)
{
  const std::size_t nb = cp.b_blocks.size();
  const std::size_t na = cp.a_blocks.size();
  cp.corners.assign(nb, std::vector<AlgebraElement>(na, AlgebraElement(cp.group)));
  cp.b_block_basis.assign(nb, {});
  cp.lifts.assign(nb, std::vector<LinearCombinationSolver>(na));
  for (std::size_t i = 0; i < nb; ++i) {
    Subspace Bi(cp.group->order());
    for (const auto& beta : target_basis) Bi.insert((cp.b_blocks[i] * beta).dense());
    cp.b_block_basis[i] = basis_elements(cp.group, Bi);
    for (std::size_t j = 0; j < na; ++j) {
      cp.corners[i][j] = cp.b_blocks[i] * cp.a_blocks[j];
      bool edge = !cp.corners[i][j].is_zero();
      if (edge != cp.embedding.is_edge(i, j)) {
        throw std::logic_error("corner projection disagrees with the diagram at (" + cp.embedding.upper.labels[i] +
                               ", " + cp.embedding.lower.labels[j] + ")");
      }
      if (!edge || cp.embedding.multiplicities[i][j] != 1) continue;
      std::vector<RationalVector> images;
      for (const auto& b : cp.b_block_basis[i]) images.push_back((cp.a_blocks[j] * b).dense());
      cp.lifts[i][j] = LinearCombinationSolver(images);
    }
  }
}

} // namespace detail

/// C(S_{n-1}) in C(S_n) with character-built central idempotents.
inline ConcretePair concrete_pair_sym(int n)
{
  if (n < 2 || n > 6) throw std::invalid_argument("concrete_pair_sym: n must be in 2..6");
  ConcretePair cp;
  auto G = symmetric_group(n);
  auto H = symmetric_group(n - 1);
  cp.group = G;
  cp.subgroup_pair = make_pair(G, H);
  for (Index g = 0; g < G->order(); ++g) cp.domain_basis.push_back(AlgebraElement::basis(G, g));
  cp.a_blocks = central_idempotents_sym(G, n);
  for (const auto& z : central_idempotents_sym(H, n - 1)) cp.b_blocks.push_back(embed(*cp.subgroup_pair, z));
  cp.embedding = embedding_diagram_sym(n);
  std::vector<AlgebraElement> target;
  for (Index h : cp.subgroup_pair->embedding()) target.push_back(AlgebraElement::basis(G, h));
  detail::finish_concrete_pair(cp, target);
  // trace check of the multiplicities: Tr rho(p_ij) = d_j m_ij n_i
  for (std::size_t i = 0; i < cp.b_blocks.size(); ++i) {
    for (std::size_t j = 0; j < cp.a_blocks.size(); ++j) {
      Rational expected = Rational(cp.embedding.lower.blocks[j]) * cp.embedding.multiplicities[i][j] *
                          cp.embedding.upper.blocks[i];
      if (regular_trace(cp.corners[i][j]) != expected) throw std::logic_error("corner trace mismatch");
    }
  }
  return cp;
}

/// Pair assembled from explicit bases and minimal central idempotents.
inline ConcretePair make_concrete_pair(GroupPtr group, std::vector<AlgebraElement> domain_basis,
                                       const std::vector<AlgebraElement>& target_basis,
                                       std::vector<AlgebraElement> a_blocks, std::vector<AlgebraElement> b_blocks,
                                       BipartiteEmbedding embedding)
{
  ConcretePair cp;
  cp.group = std::move(group);
  cp.domain_basis = std::move(domain_basis);
  cp.a_blocks = std::move(a_blocks);
  cp.b_blocks = std::move(b_blocks);
  cp.embedding = std::move(embedding);
  cp.embedding.validate();
  detail::finish_concrete_pair(cp, target_basis);
  return cp;
}

/// The unique b in z_i^B B with z_j^A b = c.
inline AlgebraElement lift_corner(const ConcretePair& cp, std::size_t i, std::size_t j, const AlgebraElement& c)
{
  auto x = cp.lifts[i][j].solve(c.dense());
  if (!x) {
    throw std::runtime_error("corner element is not the image of a B block element at (" +
                             cp.embedding.upper.labels[i] + ", " + cp.embedding.lower.labels[j] + ")");
  }
  AlgebraElement b(cp.group);
  for (std::size_t k = 0; k < x->size(); ++k) {
    if (sgn((*x)[k]) != 0) b += (*x)[k] * cp.b_block_basis[i][k];
  }
  return b;
}

/// sum over edges of lambda_ij * lift(p_ij a p_ij).
inline AlgebraElement apply_markov(const ConcretePair& cp, const GeneralizedMarkovMatrix& L, const AlgebraElement& a)
{
  if (!cp.embedding.simple_spectrum()) throw std::invalid_argument("Markov parametrization needs simple spectrum");
  AlgebraElement out(cp.group);
  for (std::size_t i = 0; i < cp.b_blocks.size(); ++i) {
    // p_ij a p_ij = z_j (z_i a z_i) since z_j is central in A
    AlgebraElement inner = cp.b_blocks[i] * a * cp.b_blocks[i];
    if (inner.is_zero()) continue;
    for (std::size_t j = 0; j < cp.a_blocks.size(); ++j) {
      if (!cp.embedding.is_edge(i, j) || sgn(L.entries(i, j)) == 0) continue;
      AlgebraElement corner = cp.a_blocks[j] * inner;
      out += L.entries(i, j) * lift_corner(cp, i, j, corner);
    }
  }
  return out;
}

/// Expectation C(G) -> C(H) attached to a generalized Markov matrix.
inline GeneralizedExpectation expectation_from_markov(const ConcretePair& cp, const GeneralizedMarkovMatrix& L)
{
  if (!cp.subgroup_pair) throw std::invalid_argument("expectation_from_markov needs a group-algebra pair");
  if (!cp.embedding.simple_spectrum()) throw std::invalid_argument("Markov parametrization needs simple spectrum");
  L.validate();
  if (L.entries.rows() != cp.b_blocks.size() || L.entries.cols() != cp.a_blocks.size()) {
    throw std::invalid_argument("Markov matrix shape does not match the pair");
  }
  std::vector<AlgebraElement> images;
  for (const auto& a : cp.domain_basis) images.push_back(apply_markov(cp, L, a));
  return GeneralizedExpectation(cp.subgroup_pair, std::move(images), "markov");
}

/// coefficient of e in u v, i.e. the normalized trace of u v.
inline Rational identity_coefficient_of_product(const AlgebraElement& u, const AlgebraElement& v)
{
  Rational s = 0;
  const auto& G = *u.group();
  for (const auto& [g, c] : u.terms()) {
    Rational w = v.coefficient(G.inverse(g));
    if (sgn(w) != 0) s += c * w;
  }
  return s;
}

using LinearMap = std::function<AlgebraElement(const AlgebraElement&)>;

/// lambda_ij = Tr(z_i^B P(z_j^A)) / Tr(z_i^B), followed by an exact check that
/// the Markov formula reproduces P on the domain basis.
inline GeneralizedMarkovMatrix markov_from_expectation(const ConcretePair& cp, const LinearMap& P,
                                                       bool check_reconstruction = true)
{
  if (!cp.embedding.simple_spectrum()) throw std::invalid_argument("Markov parametrization needs simple spectrum");
  GeneralizedMarkovMatrix L = markov_template(cp.embedding);
  for (std::size_t j = 0; j < cp.a_blocks.size(); ++j) {
    AlgebraElement image = P(cp.a_blocks[j]);
    for (std::size_t i = 0; i < cp.b_blocks.size(); ++i) {
      Rational lambda = identity_coefficient_of_product(cp.b_blocks[i], image) / cp.b_blocks[i].coefficient(0);
      if (!cp.embedding.is_edge(i, j) && sgn(lambda) != 0) {
        throw std::runtime_error("expectation is not of bimodule form: weight off the diagram");
      }
      L.entries(i, j) = lambda;
    }
  }
  L.validate();
  if (check_reconstruction) {
    for (const auto& a : cp.domain_basis) {
      if (!(apply_markov(cp, L, a) == P(a))) {
        throw std::runtime_error("expectation is not of bimodule form: reconstruction mismatch at " + a.to_string());
      }
    }
  }
  return L;
}

inline GeneralizedMarkovMatrix markov_from_expectation(const ConcretePair& cp, const GeneralizedExpectation& P,
                                                       bool check_reconstruction = true)
{
  return markov_from_expectation(
    cp, [&P](const AlgebraElement& a) { return P.apply(a); }, check_reconstruction);
}

// ---------------------------------------------------------------------------
// basic construction

/// Diagram of B in A in E, where the A-E part is the reflection of B-A.
struct TripleDiagram
{
  BlockAlgebra B, A, E;
  std::vector<std::vector<int>> b_to_a; // [i][j]
  std::vector<std::vector<int>> a_to_e; // [j][i]
};

inline TripleDiagram basic_construction_diagram(const BipartiteEmbedding& emb)
{
  emb.validate();
  TripleDiagram t;
  t.B = emb.upper;
  t.A = emb.lower;
  t.b_to_a = emb.multiplicities;
  t.E.labels = emb.upper.labels;
  t.a_to_e.assign(emb.lower.blocks.size(), std::vector<int>(emb.upper.blocks.size(), 0));
  for (std::size_t i = 0; i < emb.upper.blocks.size(); ++i) {
    int d = 0;
    for (std::size_t j = 0; j < emb.lower.blocks.size(); ++j) {
      d += emb.multiplicities[i][j] * emb.lower.blocks[j];
      t.a_to_e[j][i] = emb.multiplicities[i][j];
    }
    t.E.blocks.push_back(d);
  }
  return t;
}

struct BasicConstruction
{
  std::size_t algebra_dim = 0; ///< dim A
  Subspace operators;          ///< canonical subspace of END(A), row-major coordinates
};

/// Algebra generated inside END(C(G)) by left multiplications and P.
inline BasicConstruction basic_construction_concrete(const GeneralizedExpectation& P, std::size_t max_dim = 36 * 36)
{
  const auto& G = P.pair()->G();
  const std::size_t n = G.order();
  if (n > 36) throw std::invalid_argument("basic construction limited to dim A <= 36");
  auto as_matrix = [n](const RationalVector& v) { return RationalMatrix::from_flat(n, n, v); };
  std::vector<RationalVector> gens;
  for (Index g : G.generators()) {
    RationalMatrix L(n, n);
    for (Index x = 0; x < n; ++x) L(G.multiply(g, x), x) = 1;
    gens.push_back(L.flat());
  }
  gens.push_back(P.matrix().flat());
  std::vector<RationalVector> seeds{RationalMatrix::identity(n).flat()};
  seeds.insert(seeds.end(), gens.begin(), gens.end());
  auto mul = [&](const RationalVector& a, const RationalVector& b) { return (as_matrix(a) * as_matrix(b)).flat(); };
  return {n, word_closure(n * n, seeds, gens, mul, max_dim)};
}

/// sum_i (sum_j m_ij d_j)^2.
inline long reflection_dimension(const BipartiteEmbedding& emb) { return basic_construction_diagram(emb).E.dimension(); }

} // namespace gzwb

#endif // GZWB_SEMISIMPLE_PAIRS_HPP
