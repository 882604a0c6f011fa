#ifndef GZWB_FINITE_GROUP_HPP
#define GZWB_FINITE_GROUP_HPP

#include "permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzwb {

using Index = std::size_t;

/// Upper bound on enumerated group orders. Overridable through the
/// GZWB_MAX_GROUP_ORDER environment variable.
inline std::size_t max_group_order()
{
  constexpr std::size_t fallback = 5040;
  if (const char* env = std::getenv("GZWB_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

/// A finite permutation group materialized as a sorted element list.
///
/// Elements are kept in lexicographic order of their one-line notation, so
/// the identity always has index 0. Groups up to order 720 carry a full
/// multiplication table.
class FiniteGroup
{
public:
  static constexpr std::size_t table_limit = 720;

  /// Validates closure and sorts the elements canonically.
  static FiniteGroup from_elements(int degree, std::vector<Permutation> elements,
                                   std::string name = {})
  {
    if (elements.empty()) throw std::invalid_argument("a group needs at least the identity");
    if (elements.size() > max_group_order()) {
      throw std::length_error("group order " + std::to_string(elements.size()) +
                              " exceeds the configured cap " +
                              std::to_string(max_group_order()));
    }
    for (auto& g : elements) {
      if (g.largest_moved_point() > degree) throw std::invalid_argument("element exceeds degree");
      g = g.padded(degree);
    }
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
      throw std::invalid_argument("duplicate group elements");
    }
    FiniteGroup G(degree, std::move(elements), std::move(name));
    if (!G.elements_.front().is_identity()) throw std::invalid_argument("identity missing");
    G.build_tables(true);
    return G;
  }

  /// Closure of a generating set; throws once the cap is exceeded.
  static FiniteGroup generated_by(int degree, const std::vector<Permutation>& gens,
                                  std::string name = {})
  {
    const std::size_t cap = max_group_order();
    std::set<Permutation> seen{Permutation::identity(degree)};
    std::deque<Permutation> queue{Permutation::identity(degree)};
    while (!queue.empty()) {
      Permutation g = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        Permutation h = (s * g).padded(degree);
        if (seen.insert(h).second) {
          if (seen.size() > cap) {
            throw std::length_error("generated group exceeds the configured order cap " +
                                    std::to_string(cap));
          }
          queue.push_back(std::move(h));
        }
      }
    }
    FiniteGroup G(degree, std::vector<Permutation>(seen.begin(), seen.end()), std::move(name));
    G.build_tables(false);
    return G;
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Index i) const { return elements_.at(i); }
  static constexpr Index identity_index() { return 0; }

  std::optional<Index> find(const Permutation& g) const
  {
    if (g.largest_moved_point() > degree_) return std::nullopt;
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g)) return std::nullopt;
    return static_cast<Index>(it - elements_.begin());
  }

  Index index_of(const Permutation& g) const
  {
    auto i = find(g);
    if (!i) throw std::out_of_range("permutation " + g.cycle_notation() + " is not in the group");
    return *i;
  }

  bool contains(const Permutation& g) const { return find(g).has_value(); }

  Index multiply(Index a, Index b) const
  {
    if (!table_.empty()) return table_[a * order() + b];
    return index_of(elements_[a] * elements_[b]);
  }

  Index inverse(Index a) const { return inverse_[a]; }

  bool is_abelian() const
  {
    for (Index a = 0; a < order(); ++a) {
      for (Index b = a + 1; b < order(); ++b) {
        if (multiply(a, b) != multiply(b, a)) return false;
      }
    }
    return true;
  }

  /// Small generating set obtained greedily in canonical element order.
  std::vector<Index> generators() const
  {
    std::vector<Index> gens;
    std::vector<bool> in(order(), false);
    in[0] = true;
    std::size_t count = 1;
    for (Index g = 1; g < order() && count < order(); ++g) {
      if (in[g]) continue;
      gens.push_back(g);
      // re-close
      std::vector<Index> members;
      for (Index x = 0; x < order(); ++x) if (in[x]) members.push_back(x);
      std::deque<Index> queue(members.begin(), members.end());
      while (!queue.empty()) {
        Index x = queue.front();
        queue.pop_front();
        for (Index s : gens) {
          Index y = multiply(s, x);
          if (!in[y]) {
            in[y] = true;
            ++count;
            queue.push_back(y);
          }
        }
      }
    }
    return gens;
  }

private:
  FiniteGroup(int degree, std::vector<Permutation> elements, std::string name)
  : degree_(degree), elements_(std::move(elements)), name_(std::move(name))
  {}

  void build_tables(bool check_closure)
  {
    const std::size_t n = order();
    inverse_.resize(n);
    for (Index i = 0; i < n; ++i) {
      auto inv = find(elements_[i].inverse());
      if (!inv) throw std::invalid_argument("element list is not closed under inverses");
      inverse_[i] = *inv;
    }
    if (n <= table_limit) {
      table_.resize(n * n);
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          auto c = find(elements_[a] * elements_[b]);
          if (!c) throw std::invalid_argument("element list is not closed under products");
          table_[a * n + b] = *c;
        }
      }
    } else if (check_closure) {
      for (const auto& a : elements_) {
        for (const auto& b : elements_) {
          if (!find(a * b)) throw std::invalid_argument("element list is not closed under products");
        }
      }
    }
  }

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::string name_;
  std::vector<Index> inverse_;
  std::vector<Index> table_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

/// S_n on {1..n}, elements in lexicographic order.
inline GroupPtr symmetric_group(int n)
{
  if (n < 1) throw std::invalid_argument("symmetric_group: n must be positive");
  std::size_t order = 1;
  for (int k = 2; k <= n; ++k) order *= static_cast<std::size_t>(k);
  if (order > max_group_order()) {
    throw std::length_error("S_" + std::to_string(n) + " exceeds the configured order cap");
  }
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> elems;
  elems.reserve(order);
  do {
    elems.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return make_group(FiniteGroup::from_elements(n, std::move(elems), "S" + std::to_string(n)));
}

/// H inside G, with the index maps in both directions.
class SubgroupPair
{
public:
  SubgroupPair(GroupPtr ambient, GroupPtr subgroup)
  : ambient_(std::move(ambient)), subgroup_(std::move(subgroup))
  {
    if (!ambient_ || !subgroup_) throw std::invalid_argument("null group in pair");
    if (subgroup_->degree() > ambient_->degree()) {
      throw std::invalid_argument("subgroup degree exceeds ambient degree");
    }
    to_sub_.assign(ambient_->order(), npos);
    embedding_.reserve(subgroup_->order());
    for (Index h = 0; h < subgroup_->order(); ++h) {
      auto g = ambient_->find(subgroup_->element(h));
      if (!g) throw std::invalid_argument("subgroup element not in ambient group");
      embedding_.push_back(*g);
      to_sub_[*g] = h;
    }
    if (ambient_->order() % subgroup_->order() != 0) {
      throw std::invalid_argument("subgroup order does not divide group order");
    }
  }

  static constexpr Index npos = static_cast<Index>(-1);

  const GroupPtr& ambient() const { return ambient_; }
  const GroupPtr& subgroup() const { return subgroup_; }
  const FiniteGroup& G() const { return *ambient_; }
  const FiniteGroup& H() const { return *subgroup_; }

  bool contains(Index g) const { return to_sub_[g] != npos; }
  /// Subgroup index -> ambient index.
  Index embed(Index h) const { return embedding_[h]; }
  /// Ambient index -> subgroup index; npos if outside H.
  Index restrict(Index g) const { return to_sub_[g]; }
  const std::vector<Index>& embedding() const { return embedding_; }
  std::size_t index() const { return ambient_->order() / subgroup_->order(); }

private:
  GroupPtr ambient_;
  GroupPtr subgroup_;
  std::vector<Index> embedding_;
  std::vector<Index> to_sub_;
};

using PairPtr = std::shared_ptr<const SubgroupPair>;

inline PairPtr make_pair(GroupPtr G, GroupPtr H)
{
  return std::make_shared<const SubgroupPair>(std::move(G), std::move(H));
}

/// G_0 = {e} included in G_1 included in ... ; groups[0] is trivial.
class GroupChain
{
public:
  explicit GroupChain(std::vector<GroupPtr> groups) : groups_(std::move(groups))
  {
    if (groups_.empty()) throw std::invalid_argument("empty chain");
    if (groups_.front()->order() != 1) throw std::invalid_argument("chain must start at the trivial group");
    for (std::size_t k = 1; k < groups_.size(); ++k) {
      pairs_.push_back(make_pair(groups_[k], groups_[k - 1]));
      if (groups_[k]->order() == groups_[k - 1]->order()) {
        throw std::invalid_argument("chain is not strictly nested");
      }
    }
  }

  std::size_t size() const { return groups_.size(); }
  const GroupPtr& group(std::size_t k) const { return groups_.at(k); }
  const std::vector<GroupPtr>& groups() const { return groups_; }
  const GroupPtr& top() const { return groups_.back(); }
  /// Pair (groups[k], groups[k-1]) for k >= 1.
  const PairPtr& step(std::size_t k) const { return pairs_.at(k - 1); }

private:
  std::vector<GroupPtr> groups_;
  std::vector<PairPtr> pairs_;
};

/// S_1 in S_2 in ... in S_n, with S_{k-1} the stabilizer of the letter k.
inline GroupChain symmetric_chain(int n)
{
  if (n < 1 || n > 7) throw std::invalid_argument("symmetric_chain: n must be in 1..7");
  std::vector<GroupPtr> groups;
  for (int k = 1; k <= n; ++k) groups.push_back(symmetric_group(k));
  return GroupChain(std::move(groups));
}

/// An orbit of a conjugation action, representative = smallest member index.
struct ConjugationOrbit
{
  Index representative = 0;
  std::vector<Index> members; // sorted ambient indices
};

using ConjClass = ConjugationOrbit;
using HConjOrbit = ConjugationOrbit;

namespace detail {

inline std::vector<ConjugationOrbit> conjugation_orbits(const FiniteGroup& G,
                                                        const std::vector<Index>& acting)
{
  std::vector<bool> done(G.order(), false);
  std::vector<ConjugationOrbit> orbits;
  for (Index g = 0; g < G.order(); ++g) {
    if (done[g]) continue;
    ConjugationOrbit orb;
    orb.representative = g;
    std::deque<Index> queue{g};
    done[g] = true;
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      orb.members.push_back(x);
      for (Index h : acting) {
        Index y = G.multiply(G.multiply(h, x), G.inverse(h));
        if (!done[y]) {
          done[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(orb.members.begin(), orb.members.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

} // namespace detail

inline std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G)
{
  return detail::conjugation_orbits(G, G.generators());
}

/// Orbits of h.g = h g h^-1 for h in H acting on G.
inline std::vector<HConjOrbit> h_conjugation_orbits(const SubgroupPair& pair)
{
  std::vector<Index> acting;
  for (Index h : pair.H().generators()) acting.push_back(pair.embed(h));
  return detail::conjugation_orbits(pair.G(), acting);
}

enum class CosetSide { left, right };

/// Partition of G into cosets gH (left) or Hg (right).
struct CosetTable
{
  CosetSide side = CosetSide::left;
  std::vector<std::vector<Index>> cosets; // each sorted; ordered by first member
  std::vector<std::size_t> coset_of;      // ambient index -> coset number
};

inline CosetTable cosets(const SubgroupPair& pair, CosetSide side)
{
  const auto& G = pair.G();
  CosetTable table;
  table.side = side;
  table.coset_of.assign(G.order(), static_cast<std::size_t>(-1));
  for (Index g = 0; g < G.order(); ++g) {
    if (table.coset_of[g] != static_cast<std::size_t>(-1)) continue;
    std::vector<Index> block;
    for (Index h : pair.embedding()) {
      block.push_back(side == CosetSide::left ? G.multiply(g, h) : G.multiply(h, g));
    }
    std::sort(block.begin(), block.end());
    for (Index x : block) table.coset_of[x] = table.cosets.size();
    table.cosets.push_back(std::move(block));
  }
  return table;
}

inline CosetTable left_cosets(const SubgroupPair& pair) { return cosets(pair, CosetSide::left); }
inline CosetTable right_cosets(const SubgroupPair& pair) { return cosets(pair, CosetSide::right); }

enum class VinbergReading {
  centralizer, ///< k commutes with every element of H cap k^-1 H k
  literal      ///< k lies in the center of H cap k^-1 H k
};

/// The set {k in G : k is central for H cap k^-1 H k}, as sorted ambient indices.
inline std::vector<Index> vinberg_bar_K(const SubgroupPair& pair,
                                        VinbergReading reading = VinbergReading::centralizer)
{
  const auto& G = pair.G();
  std::vector<Index> result;
  for (Index k = 0; k < G.order(); ++k) {
    Index kinv = G.inverse(k);
    bool ok = true;
    bool k_in_intersection = false;
    for (Index hs = 0; hs < pair.H().order() && ok; ++hs) {
      Index h = pair.embed(hs);
      // h in k^-1 H k  iff  k h k^-1 in H
      if (!pair.contains(G.multiply(G.multiply(k, h), kinv))) continue;
      if (h == k) k_in_intersection = true;
      if (G.multiply(k, h) != G.multiply(h, k)) ok = false;
    }
    if (reading == VinbergReading::literal && !k_in_intersection) ok = false;
    if (ok) result.push_back(k);
  }
  return result;
}

/// Subgroup consisting of the given ambient indices (must be closed).
inline GroupPtr subgroup_from_indices(const FiniteGroup& G, const std::vector<Index>& members,
                                      std::string name = {})
{
  std::vector<Permutation> elems;
  elems.reserve(members.size());
  for (Index i : members) elems.push_back(G.element(i));
  return make_group(FiniteGroup::from_elements(G.degree(), std::move(elems), std::move(name)));
}

/// Every subgroup of G, each as a sorted list of ambient indices, ordered
/// by (order, members).
inline std::vector<std::vector<Index>> all_subgroups(const FiniteGroup& G)
{
  auto close = [&G](std::vector<bool> in) {
    std::deque<Index> queue;
    for (Index x = 0; x < G.order(); ++x) if (in[x]) queue.push_back(x);
    std::vector<Index> members(queue.begin(), queue.end());
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Index y : {G.multiply(x, members[i]), G.multiply(members[i], x)}) {
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
            queue.push_back(y);
          }
        }
      }
    }
    return in;
  };
  std::vector<bool> trivial(G.order(), false);
  trivial[0] = true;
  std::set<std::vector<bool>> found{trivial};
  std::deque<std::vector<bool>> queue{trivial};
  while (!queue.empty()) {
    auto S = queue.front();
    queue.pop_front();
    for (Index g = 0; g < G.order(); ++g) {
      if (S[g]) continue;
      auto T = S;
      T[g] = true;
      T = close(std::move(T));
      if (found.insert(T).second) queue.push_back(std::move(T));
    }
  }
  std::vector<std::vector<Index>> result;
  for (const auto& S : found) {
    std::vector<Index> m;
    for (Index x = 0; x < G.order(); ++x) if (S[x]) m.push_back(x);
    result.push_back(std::move(m));
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

// ---------------------------------------------------------------------------
// catalog of small groups

inline GroupPtr cyclic_group(int n)
{
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be positive");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return make_group(FiniteGroup::generated_by(n, {Permutation(im)}, "C" + std::to_string(n)));
}

/// Symmetries of the regular n-gon, order 2n.
inline GroupPtr dihedral_group(int n)
{
  if (n < 3) throw std::invalid_argument("dihedral_group: n must be at least 3");
  std::vector<int> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    ref[static_cast<std::size_t>(i)] = (n - i) % n + 1;
  }
  return make_group(FiniteGroup::generated_by(n, {Permutation(rot), Permutation(ref)},
                                              "D" + std::to_string(n)));
}

/// Quaternion group in its regular representation on 8 points.
inline GroupPtr quaternion_group()
{
  // element (s, u): sign s in {+,-}, unit u in {1,i,j,k}; point = 1 + 4*neg + u
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left_mult = [](int u) {
    std::vector<int> im(8);
    for (int neg = 0; neg < 2; ++neg) {
      for (int v = 0; v < 4; ++v) {
        int w = unit_mul[u][v];
        int s = unit_sign[u][v] * (neg ? -1 : 1);
        im[static_cast<std::size_t>(4 * neg + v)] = 1 + 4 * (s < 0 ? 1 : 0) + w;
      }
    }
    return Permutation(im);
  };
  return make_group(FiniteGroup::generated_by(8, {left_mult(1), left_mult(2)}, "Q8"));
}

inline GroupPtr alternating_group(int n)
{
  auto S = symmetric_group(n);
  std::vector<Permutation> even;
  for (const auto& g : S->elements()) if (g.sign() == 1) even.push_back(g);
  return make_group(FiniteGroup::from_elements(n, std::move(even), "A" + std::to_string(n)));
}

/// Z_2 x Z_4 acting on {1,2} and {3,4,5,6}.
inline GroupPtr z2_times_z4()
{
  return make_group(FiniteGroup::generated_by(
    6, {Permutation::from_cycles(6, {{1, 2}}), Permutation::from_cycles(6, {{3, 4, 5, 6}})},
    "Z2xZ4"));
}

inline GroupPtr klein_four()
{
  return make_group(FiniteGroup::generated_by(
    4, {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{3, 4}})}, "V4"));
}

/// Built-in catalog of groups of order at most 24.
inline std::vector<GroupPtr> group_catalog()
{
  std::vector<GroupPtr> cat;
  for (int n = 1; n <= 12; ++n) cat.push_back(cyclic_group(n));
  cat.push_back(klein_four());
  for (int n = 3; n <= 6; ++n) cat.push_back(dihedral_group(n));
  cat.push_back(quaternion_group());
  cat.push_back(alternating_group(4));
  cat.push_back(symmetric_group(4));
  cat.push_back(z2_times_z4());
  return cat;
}

/// Looks up "Sn", "An", "Cn", "Dn", "Q8", "V4", "Z2xZ4".
inline GroupPtr group_by_name(const std::string& name)
{
  auto number = [&](std::size_t from) {
    std::size_t pos = 0;
    int v = std::stoi(name.substr(from), &pos);
    if (from + pos != name.size()) throw std::invalid_argument("bad group name: " + name);
    return v;
  };
  if (name == "Q8") return quaternion_group();
  if (name == "V4") return klein_four();
  if (name == "Z2xZ4") return z2_times_z4();
  if (name.size() >= 2) {
    switch (name[0]) {
    case 'S': return symmetric_group(number(1));
    case 'A': return alternating_group(number(1));
    case 'C': return cyclic_group(number(1));
    case 'D': return dihedral_group(number(1));
    default: break;
    }
  }
  throw std::invalid_argument("unknown group name: " + name);
}

} // namespace gzwb

#endif // GZWB_FINITE_GROUP_HPP
