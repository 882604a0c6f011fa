#ifndef GZWB_GROUP_ALGEBRA_HPP
#define GZWB_GROUP_ALGEBRA_HPP

#include "finite_group.hpp"
#include "linear_algebra.hpp"
#include "rational.hpp"

#include <deque>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzwb {

/// A finitely supported rational combination of group elements.
class AlgebraElement
{
public:
  AlgebraElement() = default;
  explicit AlgebraElement(GroupPtr group) : group_(std::move(group))
  {
    if (!group_) throw std::invalid_argument("AlgebraElement needs a group");
  }

  static AlgebraElement zero(GroupPtr group) { return AlgebraElement(std::move(group)); }

  static AlgebraElement identity(GroupPtr group) { return basis(std::move(group), 0); }

  static AlgebraElement basis(GroupPtr group, Index g, Rational coef = 1)
  {
    AlgebraElement a(std::move(group));
    if (g >= a.group_->order()) throw std::out_of_range("basis index out of range");
    a.set(g, std::move(coef));
    return a;
  }

  static AlgebraElement of(GroupPtr group, const Permutation& g, Rational coef = 1)
  {
    Index i = group->index_of(g);
    return basis(std::move(group), i, std::move(coef));
  }

  static AlgebraElement from_dense(GroupPtr group, const RationalVector& v)
  {
    AlgebraElement a(std::move(group));
    if (v.size() != a.group_->order()) throw std::invalid_argument("dense vector has wrong length");
    for (Index i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) a.terms_.emplace_hint(a.terms_.end(), i, v[i]);
    }
    return a;
  }

  /// Sum of the given elements with coefficient 1.
  static AlgebraElement indicator(GroupPtr group, const std::vector<Index>& members)
  {
    AlgebraElement a(std::move(group));
    for (Index g : members) a.add_term(g, 1);
    return a;
  }

  const GroupPtr& group() const { return group_; }
  const std::map<Index, Rational>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Index g) const
  {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  RationalVector dense() const
  {
    RationalVector v(group_->order());
    for (const auto& [g, c] : terms_) v[g] = c;
    return v;
  }

  void set(Index g, Rational c)
  {
    if (sgn(c) == 0) terms_.erase(g);
    else terms_[g] = std::move(c);
  }

  void add_term(Index g, const Rational& c)
  {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& b)
  {
    check_same(b);
    for (const auto& [g, c] : b.terms_) add_term(g, c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& b)
  {
    check_same(b);
    for (const auto& [g, c] : b.terms_) add_term(g, -c);
    return *this;
  }

  AlgebraElement& operator*=(const Rational& s)
  {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }

  /// Convolution product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
  {
    a.check_same(b);
    const FiniteGroup& G = *a.group_;
    RationalVector acc(G.order());
    std::vector<bool> touched(G.order(), false);
    Rational tmp;
    for (const auto& [g, x] : a.terms_) {
      for (const auto& [h, y] : b.terms_) {
        Index gh = G.multiply(g, h);
        mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc[gh] += tmp;
        touched[gh] = true;
      }
    }
    AlgebraElement r(a.group_);
    for (Index i = 0; i < acc.size(); ++i) {
      if (touched[i] && sgn(acc[i]) != 0) r.terms_.emplace_hint(r.terms_.end(), i, std::move(acc[i]));
    }
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
  {
    if (a.terms_ != b.terms_) return false;
    return a.group_ == b.group_ || (a.group_ && b.group_ && a.group_->elements() == b.group_->elements());
  }

  std::string to_string() const
  {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.get_str() + "*" + group_->element(g).cycle_notation();
    }
    return s;
  }

  void check_same(const AlgebraElement& b) const
  {
    if (group_ != b.group_ && !(group_ && b.group_ && group_->elements() == b.group_->elements())) {
      throw std::invalid_argument("algebra elements live over different groups");
    }
  }

private:
  GroupPtr group_;
  std::map<Index, Rational> terms_;
};

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b)
{
  return a * b - b * a;
}

/// Sum of c_g g^-1 (rational scalars are real, so no conjugation).
inline AlgebraElement involute(const AlgebraElement& a)
{
  AlgebraElement r(a.group());
  for (const auto& [g, c] : a.terms()) r.set(a.group()->inverse(g), c);
  return r;
}

inline bool is_self_adjoint(const AlgebraElement& a) { return involute(a) == a; }

inline AlgebraElement class_sum(const GroupPtr& G, const ConjClass& c)
{
  return AlgebraElement::indicator(G, c.members);
}

inline std::vector<AlgebraElement> class_sums(const GroupPtr& G)
{
  std::vector<AlgebraElement> sums;
  for (const auto& c : conjugacy_classes(*G)) sums.push_back(class_sum(G, c));
  return sums;
}

/// Image of an element of C(H) in C(G) under the inclusion H -> G.
inline AlgebraElement embed(const SubgroupPair& pair, const AlgebraElement& b)
{
  AlgebraElement r(pair.ambient());
  for (const auto& [h, c] : b.terms()) r.set(pair.embed(h), c);
  return r;
}

/// Inverse of embed; throws if a has support outside H.
inline AlgebraElement restrict_to_subgroup(const SubgroupPair& pair, const AlgebraElement& a)
{
  AlgebraElement r(pair.subgroup());
  for (const auto& [g, c] : a.terms()) {
    Index h = pair.restrict(g);
    if (h == SubgroupPair::npos) throw std::invalid_argument("element has support outside the subgroup");
    r.set(h, c);
  }
  return r;
}

/// Transfers an element to a group with the same element set up to padding
/// (for example S_k inside S_n); throws if some support element is missing.
inline AlgebraElement transfer(const AlgebraElement& a, const GroupPtr& target)
{
  if (a.group() == target) return a;
  AlgebraElement r(target);
  for (const auto& [g, c] : a.terms()) r.set(target->index_of(a.group()->element(g)), c);
  return r;
}

/// Matrix of left multiplication by a in the group-element basis.
inline RationalMatrix regular_representation(const AlgebraElement& a)
{
  const FiniteGroup& G = *a.group();
  RationalMatrix m(G.order(), G.order());
  for (const auto& [g, c] : a.terms()) {
    for (Index x = 0; x < G.order(); ++x) m(G.multiply(g, x), x) += c;
  }
  return m;
}

/// Trace of the regular representation, |G| times the identity coefficient.
inline Rational regular_trace(const AlgebraElement& a)
{
  return Rational(static_cast<long>(a.group()->order())) * a.coefficient(0);
}

/// Positivity of a self-adjoint element: its regular representation is PSD.
inline bool is_positive(const AlgebraElement& a)
{
  if (!is_self_adjoint(a)) throw std::invalid_argument("is_positive: element is not self-adjoint");
  return is_positive_semidefinite(regular_representation(a));
}

/// Smallest subspace containing `seeds` and closed under left multiplication
/// by every generator. With the identity among the seeds this is the unital
/// algebra generated by the generators.
///
/// `multiply(gen, v)` must return gen * v in the same coordinates. Throws
/// std::length_error if the dimension passes `max_dim`.
template <typename Multiply>
Subspace word_closure(std::size_t ambient_dim, const std::vector<RationalVector>& seeds,
                      const std::vector<RationalVector>& gens, Multiply&& multiply,
                      std::size_t max_dim = static_cast<std::size_t>(-1))
{
  Subspace span(ambient_dim);
  std::deque<RationalVector> pending;
  auto push = [&](const RationalVector& v) {
    if (auto residual = span.insert(v)) {
      if (span.dim() > max_dim) {
        throw std::length_error("closure exceeds the configured dimension bound " + std::to_string(max_dim));
      }
      pending.push_back(std::move(*residual));
    }
  };
  for (const auto& s : seeds) push(s);
  while (!pending.empty()) {
    RationalVector v = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : gens) push(multiply(g, v));
  }
  return span;
}

/// Unital (or non-unital) subalgebra of C(G) generated by gens, as a
/// canonical subspace of Q^|G|.
inline Subspace generated_subalgebra(const GroupPtr& G, const std::vector<AlgebraElement>& gens,
                                     bool include_identity = true)
{
  std::vector<RationalVector> dense_gens;
  for (const auto& g : gens) {
    AlgebraElement(G).check_same(g);
    dense_gens.push_back(g.dense());
  }
  std::vector<RationalVector> seeds = dense_gens;
  if (include_identity) seeds.insert(seeds.begin(), AlgebraElement::identity(G).dense());
  auto mul = [&G](const RationalVector& a, const RationalVector& b) {
    return (AlgebraElement::from_dense(G, a) * AlgebraElement::from_dense(G, b)).dense();
  };
  return word_closure(G->order(), seeds, dense_gens, mul);
}

/// The algebra elements of a canonical subspace basis.
inline std::vector<AlgebraElement> basis_elements(const GroupPtr& G, const Subspace& s)
{
  std::vector<AlgebraElement> out;
  for (const auto& v : s.basis()) out.push_back(AlgebraElement::from_dense(G, v));
  return out;
}

/// Commutant {x : x y = y x for all y in ys} inside C(G).
inline Subspace commutant(const GroupPtr& G, const std::vector<AlgebraElement>& ys)
{
  const std::size_t n = G->order();
  RationalMatrix system(n * ys.size(), n);
  for (std::size_t k = 0; k < ys.size(); ++k) {
    for (Index x = 0; x < n; ++x) {
      AlgebraElement e = AlgebraElement::basis(G, x);
      AlgebraElement c = e * ys[k] - ys[k] * e;
      for (const auto& [g, v] : c.terms()) system(k * n + g, x) = v;
    }
  }
  return Subspace::span(n, nullspace(std::move(system)));
}

/// Random element with integer coefficients in [-bound, bound] on at most
/// `support` distinct group elements.
inline AlgebraElement random_element(const GroupPtr& G, std::mt19937_64& rng, std::size_t support,
                                     int bound = 3)
{
  AlgebraElement a(G);
  std::uniform_int_distribution<std::size_t> pick(0, G->order() - 1);
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (std::size_t i = 0; i < support; ++i) a.set(pick(rng), Rational(coef(rng)));
  return a;
}

} // namespace gzwb

#endif // GZWB_GROUP_ALGEBRA_HPP
