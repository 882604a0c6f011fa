#ifndef GZWB_EXPECTATIONS_HPP
#define GZWB_EXPECTATIONS_HPP

#include "exact_cover.hpp"
#include "finite_group.hpp"
#include "group_algebra.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzwb {

// ---------------------------------------------------------------------------
// virtual projections

/// A map p: G -> H with p(h1 g h2) = h1 p(g) h2, stored through its
/// defining set K = p^-1(e) and the full lookup table.
struct VirtualProjection
{
  PairPtr pair;
  std::vector<Index> K;          // sorted ambient indices, contains 0
  std::vector<Index> projection; // ambient index -> ambient index of p(g)
};

/// Checks both defining properties of K: invariance under conjugation by H
/// and meeting every left coset gH exactly once. Returns a reason on failure.
inline std::optional<std::string> transversal_defect(const SubgroupPair& pair, const std::vector<Index>& K)
{
  const auto& G = pair.G();
  std::vector<bool> in(G.order(), false);
  for (Index k : K) {
    if (k >= G.order()) return "element index out of range";
    in[k] = true;
  }
  if (!in[0]) return "identity not in K";
  for (Index k : K) {
    for (Index h : pair.embedding()) {
      if (!in[G.multiply(G.multiply(h, k), G.inverse(h))]) return "K is not invariant under H-conjugation";
    }
  }
  auto table = left_cosets(pair);
  std::vector<int> hits(table.cosets.size(), 0);
  for (Index k : K) ++hits[table.coset_of[k]];
  for (int c : hits) {
    if (c != 1) return "K does not meet every left coset exactly once";
  }
  return std::nullopt;
}

inline VirtualProjection make_virtual_projection(PairPtr pair, std::vector<Index> K)
{
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  if (auto defect = transversal_defect(*pair, K)) throw std::invalid_argument(*defect);
  const auto& G = pair->G();
  VirtualProjection vp{pair, std::move(K), std::vector<Index>(G.order(), 0)};
  // g = k h with k in K, h in H
  for (Index k : vp.K) {
    for (Index h : pair->embedding()) vp.projection[G.multiply(k, h)] = h;
  }
  return vp;
}

/// p^-1(e) for a map given as a table over ambient indices.
inline std::vector<Index> preimage_of_identity(const std::vector<Index>& projection)
{
  std::vector<Index> K;
  for (Index g = 0; g < projection.size(); ++g) {
    if (projection[g] == 0) K.push_back(g);
  }
  return K;
}

/// Exhaustive check of p(h) = h, p(e) = e and p(h1 g h2) = h1 p(g) h2.
inline bool satisfies_projection_identities(const VirtualProjection& vp)
{
  const auto& pair = *vp.pair;
  const auto& G = pair.G();
  if (vp.projection[0] != 0) return false;
  for (Index g = 0; g < G.order(); ++g) {
    if (!pair.contains(vp.projection[g])) return false;
  }
  for (Index h : pair.embedding()) {
    if (vp.projection[h] != h) return false;
  }
  for (Index h1 : pair.embedding()) {
    for (Index g = 0; g < G.order(); ++g) {
      Index h1g = G.multiply(h1, g);
      Index left = G.multiply(h1, vp.projection[g]);
      for (Index h2 : pair.embedding()) {
        if (vp.projection[G.multiply(h1g, h2)] != G.multiply(left, h2)) return false;
      }
    }
  }
  return true;
}

inline Index apply_virtual_projection(const VirtualProjection& vp, Index g)
{
  if (g >= vp.projection.size()) throw std::out_of_range("element not in G");
  return vp.projection[g];
}

inline Permutation apply_virtual_projection(const VirtualProjection& vp, const Permutation& g)
{
  auto idx = vp.pair->G().find(g);
  if (!idx) throw std::out_of_range("permutation " + g.cycle_notation() + " is not in G");
  return vp.pair->G().element(vp.projection[*idx]);
}

/// Every K admissible for the pair, sorted lexicographically.
///
/// H-conjugation orbits are the building blocks; an orbit is usable when
/// it meets each left coset at most once, and orbits inside H other than
/// {e} are excluded since e is forced into K. The remaining choice is an
/// exact cover of the cosets outside H.
inline std::vector<VirtualProjection> find_virtual_projections(const PairPtr& pair)
{
  const auto& G = pair->G();
  if (G.order() > max_group_order()) throw std::length_error("group exceeds the configured order cap");
  auto orbits = h_conjugation_orbits(*pair);
  auto table = left_cosets(*pair);
  const std::size_t home = table.coset_of[0];

  // columns: cosets other than H itself
  std::vector<std::size_t> column_of(table.cosets.size(), static_cast<std::size_t>(-1));
  std::size_t columns = 0;
  for (std::size_t c = 0; c < table.cosets.size(); ++c) {
    if (c != home) column_of[c] = columns++;
  }

  ExactCover cover(columns);
  std::vector<const HConjOrbit*> option_orbit;
  for (const auto& orb : orbits) {
    if (table.coset_of[orb.representative] == home) continue;
    std::vector<std::size_t> cols;
    bool admissible = true;
    for (Index g : orb.members) {
      std::size_t col = column_of[table.coset_of[g]];
      if (std::find(cols.begin(), cols.end(), col) != cols.end()) {
        admissible = false;
        break;
      }
      cols.push_back(col);
    }
    if (!admissible) continue;
    cover.add_option(std::move(cols));
    option_orbit.push_back(&orb);
  }

  std::vector<std::vector<Index>> sets;
  for (const auto& sol : cover.all_solutions()) {
    std::vector<Index> K{0};
    for (auto o : sol) {
      K.insert(K.end(), option_orbit[o]->members.begin(), option_orbit[o]->members.end());
    }
    std::sort(K.begin(), K.end());
    sets.push_back(std::move(K));
  }
  std::sort(sets.begin(), sets.end());

  std::vector<VirtualProjection> out;
  for (auto& K : sets) out.push_back(make_virtual_projection(pair, std::move(K)));
  return out;
}

// ---------------------------------------------------------------------------
// generalized expectations C(G) -> C(H)

/// Linear map C(G) -> C(H), H embedded in G, stored by its values on the
/// group basis. Images live in C(G) with support inside H.
class GeneralizedExpectation
{
public:
  GeneralizedExpectation() = default;

  GeneralizedExpectation(PairPtr pair, std::vector<AlgebraElement> images, std::string name = {})
  : pair_(std::move(pair)), images_(std::move(images)), name_(std::move(name))
  {
    if (!pair_) throw std::invalid_argument("expectation needs a subgroup pair");
    if (images_.size() != pair_->G().order()) throw std::invalid_argument("one image per group element required");
    for (const auto& im : images_) {
      AlgebraElement(pair_->ambient()).check_same(im);
      for (const auto& [g, c] : im.terms()) {
        if (!pair_->contains(g)) throw std::invalid_argument("image leaves the subalgebra C(H)");
      }
    }
  }

  const PairPtr& pair() const { return pair_; }
  const std::string& name() const { return name_; }
  const std::vector<AlgebraElement>& images() const { return images_; }
  const AlgebraElement& image(Index g) const { return images_.at(g); }

  AlgebraElement apply(const AlgebraElement& a) const
  {
    AlgebraElement r(pair_->ambient());
    for (const auto& [g, c] : a.terms()) r += c * images_.at(g);
    return r;
  }

  /// apply(a) read as an element of C(H).
  AlgebraElement apply_to_subgroup(const AlgebraElement& a) const
  {
    return restrict_to_subgroup(*pair_, apply(a));
  }

  /// |G| x |G| matrix; column g holds the coordinates of P(g).
  RationalMatrix matrix() const
  {
    const std::size_t n = pair_->G().order();
    RationalMatrix m(n, n);
    for (Index g = 0; g < n; ++g) {
      for (const auto& [x, c] : images_[g].terms()) m(x, g) = c;
    }
    return m;
  }

  friend bool operator==(const GeneralizedExpectation& a, const GeneralizedExpectation& b)
  {
    return a.images_ == b.images_;
  }

private:
  PairPtr pair_;
  std::vector<AlgebraElement> images_;
  std::string name_;
};

inline GeneralizedExpectation linearize(const VirtualProjection& vp)
{
  std::vector<AlgebraElement> images;
  for (Index g = 0; g < vp.projection.size(); ++g) {
    images.push_back(AlgebraElement::basis(vp.pair->ambient(), vp.projection[g]));
  }
  return GeneralizedExpectation(vp.pair, std::move(images), "virtual-projection");
}

/// P(h) = h on H, P(g) = 0 off H.
inline GeneralizedExpectation plancherel_expectation(const PairPtr& pair)
{
  std::vector<AlgebraElement> images;
  for (Index g = 0; g < pair->G().order(); ++g) {
    images.push_back(pair->contains(g) ? AlgebraElement::basis(pair->ambient(), g)
                                       : AlgebraElement(pair->ambient()));
  }
  return GeneralizedExpectation(pair, std::move(images), "plancherel");
}

inline GeneralizedExpectation identity_expectation(const GroupPtr& H)
{
  return plancherel_expectation(make_pair(H, H));
}

/// Pointwise affine combination; weights must sum to 1.
inline GeneralizedExpectation convex_mix(const std::vector<Rational>& weights,
                                         const std::vector<GeneralizedExpectation>& Ps)
{
  if (weights.empty() || weights.size() != Ps.size()) {
    throw std::invalid_argument("convex_mix: one weight per expectation required");
  }
  Rational total = 0;
  for (const auto& w : weights) total += w;
  if (total != 1) throw std::invalid_argument("convex_mix: weights sum to " + total.get_str() + ", not 1");
  const auto& pair = Ps.front().pair();
  for (const auto& P : Ps) {
    if (P.pair()->G().elements() != pair->G().elements() ||
        P.pair()->H().elements() != pair->H().elements()) {
      throw std::invalid_argument("convex_mix: expectations act on different pairs");
    }
  }
  std::vector<AlgebraElement> images;
  for (Index g = 0; g < pair->G().order(); ++g) {
    AlgebraElement im(pair->ambient());
    for (std::size_t i = 0; i < Ps.size(); ++i) im += weights[i] * transfer(Ps[i].image(g), pair->ambient());
    images.push_back(std::move(im));
  }
  return GeneralizedExpectation(pair, std::move(images), "mix");
}

// ---------------------------------------------------------------------------
// axiom verification

struct AxiomOptions
{
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t exhaustive_limit = 24; ///< exhaustive triples and witness search up to this |G|
  std::size_t witness_support = 3;
  int witness_bound = 1;             ///< witness coefficients range over [-bound, bound]
  std::vector<AlgebraElement> extra_candidates; ///< additional a to test P(a a*) on
};

struct AxiomReport
{
  bool projection_onto_B = false;
  bool bimodule = false;
  bool star_compatible = false;
  bool unital = false;
  bool positive = false;
  bool exhaustive = false;
  std::optional<AlgebraElement> witness; ///< a with P(a a*) not positive
  std::size_t positivity_checks = 0;

  bool generalized() const { return projection_onto_B && bimodule && star_compatible && unital; }
  bool true_expectation() const { return generalized() && positive; }
};

namespace detail {

/// True if P(a a*) is self-adjoint and positive in C(H).
inline bool positive_on(const GeneralizedExpectation& P, const AlgebraElement& a)
{
  AlgebraElement x = P.apply_to_subgroup(a * involute(a));
  if (!is_self_adjoint(x)) return false;
  return is_positive(x);
}

template <typename Visit>
bool for_each_small_element(const GroupPtr& G, std::size_t max_support, int bound, Visit&& visit)
{
  const std::size_t n = G->order();
  std::vector<Index> support;
  std::vector<int> coefs;
  // coefficients are nonzero; the first is positive since a and -a give the same a a*
  std::function<bool(Index)> extend = [&](Index start) -> bool {
    if (!support.empty()) {
      AlgebraElement a(G);
      for (std::size_t i = 0; i < support.size(); ++i) a.set(support[i], Rational(coefs[i]));
      if (!visit(a)) return false;
    }
    if (support.size() == max_support) return true;
    for (Index g = start; g < n; ++g) {
      for (int c = -bound; c <= bound; ++c) {
        if (c == 0 || (support.empty() && c < 0)) continue;
        support.push_back(g);
        coefs.push_back(c);
        bool go_on = extend(g + 1);
        support.pop_back();
        coefs.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  };
  return extend(0);
}

} // namespace detail

/// Checks the expectation axioms: P(b) = b, bimodule property, P(a*) = P(a)*,
/// P(1) = 1, and positivity of P(a a*).
///
/// Triples are enumerated exhaustively for |G| <= exhaustive_limit and
/// sampled otherwise. Positivity is tested on random a, on the supplied
/// extra candidates, and (small groups) on every a with small support.
inline AxiomReport verify_axioms(const GeneralizedExpectation& P, const AxiomOptions& opt = {})
{
  const auto& pair = *P.pair();
  const auto& G = pair.G();
  const auto Gp = pair.ambient();
  AxiomReport rep;
  rep.exhaustive = G.order() <= opt.exhaustive_limit;
  std::mt19937_64 rng(opt.seed);

  rep.projection_onto_B = true;
  for (Index h : pair.embedding()) {
    if (!(P.image(h) == AlgebraElement::basis(Gp, h))) rep.projection_onto_B = false;
  }

  rep.unital = P.image(0) == AlgebraElement::identity(Gp);

  rep.star_compatible = true;
  for (Index g = 0; g < G.order() && rep.star_compatible; ++g) {
    if (!(P.image(G.inverse(g)) == involute(P.image(g)))) rep.star_compatible = false;
  }

  rep.bimodule = true;
  auto check_triple = [&](Index h1, Index g, Index h2) {
    Index x = G.multiply(G.multiply(h1, g), h2);
    AlgebraElement lhs = P.image(x);
    AlgebraElement rhs = AlgebraElement::basis(Gp, h1) * P.image(g) * AlgebraElement::basis(Gp, h2);
    return lhs == rhs;
  };
  if (rep.exhaustive) {
    for (Index h1 : pair.embedding()) {
      for (Index g = 0; g < G.order() && rep.bimodule; ++g) {
        for (Index h2 : pair.embedding()) {
          if (!check_triple(h1, g, h2)) {
            rep.bimodule = false;
            break;
          }
        }
      }
      if (!rep.bimodule) break;
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick_h(0, pair.H().order() - 1);
    std::uniform_int_distribution<std::size_t> pick_g(0, G.order() - 1);
    for (std::size_t s = 0; s < opt.samples && rep.bimodule; ++s) {
      if (!check_triple(pair.embed(pick_h(rng)), pick_g(rng), pair.embed(pick_h(rng)))) rep.bimodule = false;
    }
  }

  rep.positive = true;
  auto test = [&](const AlgebraElement& a) {
    ++rep.positivity_checks;
    if (detail::positive_on(P, a)) return true;
    rep.positive = false;
    rep.witness = a;
    return false;
  };
  if (rep.exhaustive) {
    detail::for_each_small_element(Gp, opt.witness_support, opt.witness_bound, test);
  }
  for (const auto& a : opt.extra_candidates) {
    if (!rep.positive) break;
    test(transfer(a, Gp));
  }
  const std::size_t support = std::min<std::size_t>(G.order(), 8);
  for (std::size_t s = 0; s < opt.samples && rep.positive; ++s) {
    test(random_element(Gp, rng, support));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// kernel complements

/// A complement T of C(H) in C(G) with C(H) T C(H) inside T.
struct ComplementSubspace
{
  PairPtr pair;
  Subspace T;
};

inline Subspace subgroup_subspace(const SubgroupPair& pair)
{
  std::vector<RationalVector> vs;
  for (Index h : pair.embedding()) vs.push_back(AlgebraElement::basis(pair.ambient(), h).dense());
  return Subspace::span(pair.G().order(), vs);
}

/// Reason why T fails to be a bimodule complement, if it does.
inline std::optional<std::string> complement_defect(const SubgroupPair& pair, const Subspace& T)
{
  const std::size_t n = pair.G().order();
  if (T.ambient_dim() != n) return "T lives in the wrong space";
  Subspace B = subgroup_subspace(pair);
  if (T.dim() + B.dim() != n) return "dim T + dim B differs from dim A";
  if ((T + B).dim() != n) return "T meets B nontrivially";
  const auto Gp = pair.ambient();
  for (const auto& t : basis_elements(Gp, T)) {
    for (Index h : pair.embedding()) {
      AlgebraElement hb = AlgebraElement::basis(Gp, h);
      if (!T.contains((hb * t).dense()) || !T.contains((t * hb).dense())) return "B T B is not contained in T";
    }
  }
  return std::nullopt;
}

inline ComplementSubspace kernel_complement(const GeneralizedExpectation& P)
{
  Subspace T = Subspace::span(P.pair()->G().order(), nullspace(P.matrix()));
  if (auto defect = complement_defect(*P.pair(), T)) {
    throw std::invalid_argument("kernel is not a bimodule complement: " + *defect);
  }
  return {P.pair(), std::move(T)};
}

/// Projection onto C(H) along T.
inline GeneralizedExpectation expectation_from_complement(const PairPtr& pair, const Subspace& T)
{
  if (auto defect = complement_defect(*pair, T)) throw std::invalid_argument(*defect);
  const std::size_t n = pair->G().order();
  const std::size_t nb = pair->H().order();
  RationalMatrix M(n, n);
  for (std::size_t j = 0; j < nb; ++j) M(pair->embed(j), j) = 1;
  for (std::size_t j = 0; j < T.dim(); ++j) {
    for (std::size_t i = 0; i < n; ++i) M(i, nb + j) = T.basis()[j][i];
  }
  auto Minv = inverse(M);
  if (!Minv) throw std::logic_error("complement basis is singular");
  std::vector<AlgebraElement> images;
  for (Index g = 0; g < n; ++g) {
    AlgebraElement im(pair->ambient());
    for (std::size_t j = 0; j < nb; ++j) im.set(pair->embed(j), (*Minv)(j, g));
    images.push_back(std::move(im));
  }
  return GeneralizedExpectation(pair, std::move(images), "from-complement");
}

inline GeneralizedExpectation expectation_from_complement(const ComplementSubspace& c)
{
  return expectation_from_complement(c.pair, c.T);
}

} // namespace gzwb

#endif // GZWB_EXPECTATIONS_HPP
