#ifndef GZWB_VERIFY_HPP
#define GZWB_VERIFY_HPP

#include "bratteli.hpp"
#include "expectations.hpp"
#include "finite_group.hpp"
#include "gz_algebras.hpp"
#include "semisimple_pairs.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gzwb {

struct VerifyOptions
{
  int max_n = 6;          ///< largest symmetric group degree touched
  std::uint64_t seed = 1; ///< base seed for random inputs
};

struct CriterionResult
{
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

/// Collects failed checks and a short summary line.
class Checklist
{
public:
  void require(bool ok, const std::string& what)
  {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }

  std::string summary() const
  {
    std::ostringstream os;
    os << (total_ - failures_.size()) << "/" << total_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    std::size_t shown = 0;
    for (const auto& f : failures_) {
      if (shown++ == 6) {
        os << "; ... " << failures_.size() - 6 << " more failures";
        break;
      }
      os << "; FAILED " << f;
    }
    return os.str();
  }

private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

inline CriterionResult run_criterion(int id, std::string name, const std::function<void(Checklist&)>& body)
{
  auto t0 = std::chrono::steady_clock::now();
  Checklist c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = c.ok();
  r.detail = c.summary();
  return r;
}

inline std::string pair_name(const FiniteGroup& G, const std::vector<Index>& H)
{
  std::ostringstream os;
  os << "(" << G.name() << ", {";
  for (std::size_t i = 0; i < H.size(); ++i) os << (i ? " " : "") << G.element(H[i]).cycle_notation();
  os << "})";
  return os.str();
}

inline std::string with_k(const FiniteGroup& G, const std::vector<Index>& H, const std::vector<Index>& K)
{
  std::ostringstream os;
  os << pair_name(G, H) << " K = {";
  for (std::size_t i = 0; i < K.size(); ++i) os << (i ? " " : "") << G.element(K[i]).cycle_notation();
  os << "}";
  return os.str();
}

} // namespace detail

// ---------------------------------------------------------------------------

inline CriterionResult verify_vproj_census(const VerifyOptions& opt = {})
{
  return detail::run_criterion(1, "virtual projection census", [&](detail::Checklist& c) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 3; n <= std::min(opt.max_n, 6); ++n) {
      auto pair = make_pair(symmetric_group(n), symmetric_group(n - 1));
      auto vps = find_virtual_projections(pair);
      c.note("S" + std::to_string(n) + ": " + std::to_string(vps.size()));
      if (n == 3) c.require(vps.size() == 2, "S3 count is 2");
      if (n == 4) c.require(vps.size() >= 2, "S4 count is at least 2");
      if (n >= 5) {
        c.require(vps.size() == 1, "S" + std::to_string(n) + " count is 1");
        std::vector<Index> expected{0};
        for (int i = 1; i < n; ++i) expected.push_back(pair->G().index_of(Permutation::transposition(n, i, n)));
        std::sort(expected.begin(), expected.end());
        c.require(!vps.empty() && vps[0].K == expected, "S" + std::to_string(n) + " solution is e and the (i n)");
      }
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(s < 10, "runtime under 10 s");
  });
}

inline CriterionResult verify_vproj_catalog(const VerifyOptions& opt = {})
{
  return detail::run_criterion(2, "virtual projection round trip on the catalog", [&](detail::Checklist& c) {
    std::size_t pairs = 0, solutions = 0, abelian_pairs = 0;
    for (const auto& G : group_catalog()) {
      if (G->order() > 24) continue;
      for (const auto& members : all_subgroups(*G)) {
        auto pair = make_pair(G, subgroup_from_indices(*G, members));
        ++pairs;
        auto vps = find_virtual_projections(pair);
        solutions += vps.size();
        bool any_positive = false;
        for (const auto& vp : vps) {
          bool ok = satisfies_projection_identities(vp) && preimage_of_identity(vp.projection) == vp.K;
          c.require(ok, "projection identities for " + detail::with_k(*G, members, vp.K));
          if (G->is_abelian() && !any_positive) {
            AxiomOptions ao;
            ao.seed = opt.seed;
            any_positive = verify_axioms(linearize(vp), ao).positive;
          }
        }
        if (G->is_abelian()) {
          ++abelian_pairs;
          c.require(!vps.empty(), "some solution exists for abelian pair " + detail::pair_name(*G, members));
          c.require(any_positive, "some positive solution exists for abelian pair " + detail::pair_name(*G, members));
        }
      }
    }
    c.note(std::to_string(pairs) + " pairs, " + std::to_string(solutions) + " solutions, " +
           std::to_string(abelian_pairs) + " abelian pairs");
  });
}

inline CriterionResult verify_linearized_positivity(const VerifyOptions& opt = {})
{
  return detail::run_criterion(3, "linearized projections and positivity", [&](detail::Checklist& c) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0, star_failures = 0;
    for (const auto& G : group_catalog()) {
      if (G->order() > 24) continue;
      for (const auto& members : all_subgroups(*G)) {
        auto pair = make_pair(G, subgroup_from_indices(*G, members));
        for (const auto& vp : find_virtual_projections(pair)) {
          AxiomOptions ao;
          ao.samples = 0;
          ao.witness_support = 0;
          auto rep = verify_axioms(linearize(vp), ao);
          ++checked;
          if (!rep.star_compatible) ++star_failures;
          c.require(rep.exhaustive && rep.generalized(), "expectation axioms for " + detail::with_k(*G, members, vp.K));
        }
      }
    }
    c.note(std::to_string(checked) + " linearizations, " + std::to_string(star_failures) + " not star compatible");
    auto s3 = make_pair(symmetric_group(3), symmetric_group(2));
    // the standard K consists of e and the transpositions (i 3)
    for (const auto& vp : find_virtual_projections(s3)) {
      if (transversal_weight(s3->G(), vp.K) != 4) continue;
      AxiomOptions ao;
      ao.seed = opt.seed;
      auto rep = verify_axioms(linearize(vp), ao);
      c.require(!rep.positive && rep.witness, "standard S3 linearization has a positivity witness");
      if (rep.witness) c.note("witness " + rep.witness->to_string());
    }
    AxiomOptions ao;
    ao.seed = opt.seed;
    ao.witness_support = 0;
    auto rep = verify_axioms(plancherel_expectation(s3), ao);
    c.require(rep.true_expectation() && rep.positivity_checks >= 100, "Plancherel passes 100 positivity samples");
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(s < 30, "runtime under 30 s");
  });
}

inline CriterionResult verify_markov_parametrization(const VerifyOptions& opt = {})
{
  return detail::run_criterion(4, "Markov parametrization round trip", [&](detail::Checklist& c) {
    std::mt19937_64 rng(opt.seed);
    std::size_t trues = 0, signeds = 0;
    for (int n = 2; n <= std::min(opt.max_n, 4); ++n) {
      auto cp = concrete_pair_sym(n);
      AxiomOptions ao;
      ao.seed = opt.seed;
      ao.witness_support = 0;
      ao.samples = 20;
      ao.extra_candidates = cp.a_blocks;
      for (int s = 0; s < 20; ++s) {
        auto L = random_markov(cp.embedding, rng, s % 2 == 1);
        auto P = expectation_from_markov(cp, L);
        auto back = markov_from_expectation(cp, P);
        std::string tag = "S" + std::to_string(n) + " sample " + std::to_string(s);
        c.require(back == L, "round trip " + tag);
        auto rep = verify_axioms(P, ao);
        c.require(rep.generalized(), "expectation axioms " + tag);
        c.require(rep.positive == L.is_true(), "positivity matches nonnegativity " + tag);
        (L.is_true() ? trues : signeds)++;
      }
    }
    c.note(std::to_string(trues) + " true and " + std::to_string(signeds) + " signed matrices");
  });
}

inline CriterionResult verify_reflection_dimension(const VerifyOptions& = {})
{
  return detail::run_criterion(5, "basic construction dimension", [&](detail::Checklist& c) {
    // two faithful expectations per pair
    struct Case
    {
      int n;
      std::vector<std::vector<Rational>> other; // rows of a second Markov matrix
      long expected;
    };
    std::vector<Case> cases{
      {2, {{make_rational(1, 3), make_rational(2, 3)}}, 4},
      {3, {{make_rational(1, 4), make_rational(3, 4)}, {make_rational(2, 5), make_rational(3, 5)}}, 18},
    };
    for (const auto& cs : cases) {
      auto cp = concrete_pair_sym(cs.n);
      long predicted = reflection_dimension(cp.embedding);
      auto L = markov_template(cp.embedding);
      for (std::size_t i = 0; i < L.entries.rows(); ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < L.entries.cols(); ++j) {
          if (L.edges[i][j]) L.entries(i, j) = cs.other[i][k++];
        }
      }
      auto first = basic_construction_concrete(plancherel_expectation(cp.subgroup_pair));
      auto second = basic_construction_concrete(expectation_from_markov(cp, L));
      std::string tag = "S" + std::to_string(cs.n);
      c.note(tag + ": dim " + std::to_string(first.operators.dim()) + " predicted " + std::to_string(predicted));
      c.require(predicted == cs.expected, "reflection formula value " + tag);
      c.require(static_cast<long>(first.operators.dim()) == predicted, "Plancherel closure dimension " + tag);
      c.require(first.operators == second.operators, "subspace independent of the expectation " + tag);
    }
  });
}

/// Content vectors (c_2..c_n) of all standard tableaux with n boxes.
inline std::set<std::vector<int>> tableau_contents(int n)
{
  std::set<std::vector<int>> out;
  std::function<void(const Partition&, std::vector<int>&)> rec = [&](const Partition& p, std::vector<int>& cs) {
    if (size_of(p) == n) {
      out.insert(cs);
      return;
    }
    for (const auto& [q, c] : add_box(p)) {
      cs.push_back(c);
      rec(q, cs);
      cs.pop_back();
    }
  };
  std::vector<int> cs;
  rec(Partition{1}, cs);
  return out;
}

inline CriterionResult verify_gz_structure(const VerifyOptions& opt = {})
{
  return detail::run_criterion(6, "GZ algebra structure", [&](detail::Checklist& c) {
    auto t0 = std::chrono::steady_clock::now();
    const std::size_t expected[] = {0, 1, 2, 4, 10, 26, 76};
    for (int n = 2; n <= std::min(opt.max_n, 5); ++n) {
      auto chain = symmetric_chain(n);
      auto gz = gz_algebra(chain, n);
      std::string tag = "n=" + std::to_string(n);
      c.require(gz.dim() == expected[n], "dim GZ " + tag);
      auto yjm = yjm_elements(gz.group, n);
      c.require(commutant(gz.group, yjm.elements) == gz.subspace, "commutant equals GZ " + tag);
      c.require(generated_subalgebra(gz.group, yjm.elements) == gz.subspace, "YJM generate " + tag);
      auto basis = gz_basis(gz, n);
      std::set<std::vector<int>> contents;
      AlgebraElement sum(gz.group);
      for (const auto& v : basis) {
        contents.insert(v.contents);
        sum += v.idempotent;
      }
      c.require(contents.size() == basis.size() && contents == tableau_contents(n), "contents biject with tableaux " + tag);
      c.require(sum == AlgebraElement::identity(gz.group), "idempotents sum to 1 " + tag);
      bool orthogonal = true;
      for (std::size_t i = 0; i < basis.size() && orthogonal; ++i)
        for (std::size_t j = i + 1; j < basis.size() && orthogonal; ++j)
          orthogonal = (basis[i].idempotent * basis[j].idempotent).is_zero();
      c.require(orthogonal, "idempotents orthogonal " + tag);
      auto z = central_idempotents_sym(gz.group, n);
      auto shapes = partitions_of(n);
      bool one_block = true;
      for (const auto& v : basis) {
        std::size_t hits = 0;
        for (std::size_t l = 0; l < z.size(); ++l) {
          AlgebraElement p = z[l] * v.idempotent;
          if (p == v.idempotent) {
            ++hits;
            one_block = one_block && shapes[l] == v.path.back();
          } else {
            one_block = one_block && p.is_zero();
          }
        }
        one_block = one_block && hits == 1;
      }
      c.require(one_block, "each idempotent lies in one block " + tag);
      c.note(tag + " dim " + std::to_string(gz.dim()));
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(s < 300, "runtime under 5 min");
  });
}

inline CriterionResult verify_generators(const VerifyOptions& opt = {})
{
  return detail::run_criterion(7, "generators from virtual projections", [&](detail::Checklist& c) {
    for (int n = 2; n <= std::min(opt.max_n, 5); ++n) {
      auto rep = verify_theorem4(symmetric_chain(n));
      std::string tag = "n=" + std::to_string(n);
      c.require(rep.commute, "(i) orbit sums commute " + tag);
      c.require(rep.generates, "(ii) kappa generate GZ " + tag);
      c.require(rep.proof_step, "(iii) centers generated " + tag);
      std::string note = tag + " GZ dim " + std::to_string(rep.gz_dim) + " kappa dim " + std::to_string(rep.kappa_dim);
      if (rep.kernel_reading_dim) note += " kernel reading dim " + std::to_string(*rep.kernel_reading_dim);
      if (!rep.alternative_failures.empty()) {
        note += ", " + std::to_string(rep.alternative_failures.size()) + " failures among " +
                std::to_string(rep.alternatives) + " other K choices";
      }
      c.note(note);
    }
  });
}

inline CriterionResult verify_plancherel_triangle(const VerifyOptions& opt = {})
{
  return detail::run_criterion(8, "Plancherel consistency", [&](detail::Checklist& c) {
    const int top = std::min(opt.max_n, 6);
    auto Y = young_lattice(top);
    auto L = plancherel_system(Y);
    for (int n = 2; n <= std::min(top, 5); ++n) {
      auto cp = concrete_pair_sym(n);
      auto M = markov_from_expectation(cp, plancherel_expectation(cp.subgroup_pair));
      c.require(M.entries == L.at(static_cast<std::size_t>(n)), "extracted matrix equals growth matrix n=" + std::to_string(n));
    }
    Rational fact = 1;
    for (int n = 1; n <= top; ++n) {
      fact *= n;
      bool cylinders = true;
      for (const auto& t : enumerate_paths(Y, static_cast<std::size_t>(n))) {
        cylinders = cylinders && cylinder_measure(L, t) == Rational(Y.levels[static_cast<std::size_t>(n)][t.end()].dim) / fact;
      }
      c.require(cylinders, "cylinder measures n=" + std::to_string(n));
      auto marg = shape_marginals(L, static_cast<std::size_t>(n));
      bool shapes = true;
      for (std::size_t v = 0; v < marg.size(); ++v) {
        long d = Y.levels[static_cast<std::size_t>(n)][v].dim;
        shapes = shapes && marg[v] == Rational(d * d) / fact;
      }
      c.require(shapes, "shape marginals n=" + std::to_string(n));
    }
  });
}

inline CriterionResult verify_martingales(const VerifyOptions& opt = {})
{
  return detail::run_criterion(9, "martingales and towers", [&](detail::Checklist& c) {
    const int N = std::min(opt.max_n, 4);
    std::mt19937_64 rng(opt.seed);
    auto chain = symmetric_chain(N);
    std::vector<std::pair<std::string, ExpectationChain>> families{
      {"Plancherel", plancherel_chain(chain)}, {"virtual projection", virtual_projection_chain(chain)}};
    std::vector<GeneralizedMarkovMatrix> signed_rows;
    for (int n = 2; n <= N; ++n) signed_rows.push_back(random_markov(embedding_diagram_sym(n), rng, true));
    families.emplace_back("signed Markov", markov_chain_sym(N, signed_rows));
    auto gzN = gz_algebra(chain, N);
    for (const auto& [name, E] : families) {
      auto top = random_element(chain.top(), rng, 6);
      auto T = tower_from_top(E, top);
      c.require(tower_verify(E, T), "downward tower verifies (" + name + ")");
      c.require(tower_verify(E, tower_from_top(E, AlgebraElement::identity(chain.top()))), "unit tower (" + name + ")");
      // bimodule action
      for (std::size_t m = 1; m <= static_cast<std::size_t>(N); ++m) {
        auto b1 = random_element(chain.group(m - 1), rng, 3);
        auto b2 = random_element(chain.group(m - 1), rng, 3);
        auto left = tower_act(E, m, b1, Side::left, tower_act(E, m, b2, Side::left, T));
        auto right = tower_act(E, m, b1, Side::right, tower_act(E, m, b2, Side::right, T));
        c.require(tower_verify(E, left) && tower_verify(E, right), "action keeps towers (" + name + ")");
        c.require(left == tower_act(E, m, b1 * b2, Side::left, T), "left associativity (" + name + ")");
        c.require(right == tower_act(E, m, b2 * b1, Side::right, T), "right associativity (" + name + ")");
      }
      // GZ towers are martingales
      AlgebraElement gz_top(chain.top());
      for (const auto& b : gzN.basis()) gz_top += Rational(static_cast<long>(rng() % 7) - 3) * b;
      auto S = gz_path_system(E);
      auto M = gz_tower_to_martingale(S, tower_from_top(E, gz_top));
      c.require(is_martingale(S.markov, M), "GZ tower is a martingale (" + name + ")");
      auto C = gz_tower_to_martingale(S, tower_from_top(E, AlgebraElement::identity(chain.top())));
      bool constant = true;
      for (const auto& f : C.levels)
        for (const auto& [t, x] : f) constant = constant && x == 1;
      c.require(constant, "unit tower gives the constant martingale (" + name + ")");
      c.note(name + (S.markov.is_true() ? " path system true" : " path system signed"));
      // path-level transitions equal block-level ones
      for (int n = 2; n <= N; ++n) {
        auto cp = concrete_pair_sym(n);
        const auto& P = E.at(static_cast<std::size_t>(n));
        auto block = markov_from_expectation(cp, [&](const AlgebraElement& a) {
          return transfer(P.apply(transfer(a, P.pair()->ambient())), cp.group);
        });
        const auto& paths = S.markov.diagram;
        bool match = true;
        for (std::size_t u = 0; u < paths.width(static_cast<std::size_t>(n - 1)); ++u) {
          for (std::size_t v = 0; v < paths.width(static_cast<std::size_t>(n)); ++v) {
            if (paths.multiplicity(static_cast<std::size_t>(n), u, v) == 0) continue;
            const auto& t = S.bases[static_cast<std::size_t>(n - 1)][v].path;
            std::size_t i = 0;
            for (; i < cp.embedding.upper.labels.size(); ++i)
              if (cp.embedding.upper.labels[i] == label(t[t.size() - 2])) break;
            std::size_t j = 0;
            for (; j < cp.embedding.lower.labels.size(); ++j)
              if (cp.embedding.lower.labels[j] == label(t.back())) break;
            match = match && S.markov.at(static_cast<std::size_t>(n))(u, v) == block.entries(i, j);
          }
        }
        c.require(match, "path transitions equal block transitions n=" + std::to_string(n) + " (" + name + ")");
      }
    }
    // centers go to centers, GZ to GZ
    for (int n = 2; n <= std::min(opt.max_n, 5); ++n) {
      auto ch = symmetric_chain(n);
      auto gz_here = gz_algebra(ch, n);
      auto gz_below = gz_algebra(ch, n - 1);
      for (const auto& [name, E] : {std::pair{std::string("Plancherel"), plancherel_chain(ch)},
                                    std::pair{std::string("virtual projection"), virtual_projection_chain(ch)}}) {
        const auto& P = E.at(static_cast<std::size_t>(n));
        c.require(maps_center_onto_center(P), "center onto center n=" + std::to_string(n) + " (" + name + ")");
        bool inside = true;
        for (const auto& b : gz_here.basis()) inside = inside && gz_below.contains(E.apply(static_cast<std::size_t>(n), b));
        c.require(inside, "GZ into GZ n=" + std::to_string(n) + " (" + name + ")");
      }
    }
  });
}

inline CriterionResult verify_sampling(const VerifyOptions& opt = {})
{
  return detail::run_criterion(10, "Plancherel sampling smoke test", [&](detail::Checklist& c) {
    auto t0 = std::chrono::steady_clock::now();
    const std::size_t N = 100000;
    auto Y = young_lattice(4);
    auto L = plancherel_system(Y);
    std::mt19937_64 rng(opt.seed + 6);
    std::vector<std::size_t> counts(Y.width(4), 0);
    for (std::size_t s = 0; s < N; ++s) ++counts[sample_path(L, 4, rng).end()];
    auto exact = shape_marginals(L, 4);
    for (std::size_t v = 0; v < counts.size(); ++v) {
      double p = exact[v].get_d();
      double freq = static_cast<double>(counts[v]) / N;
      double se = std::sqrt(p * (1 - p) / N);
      std::ostringstream os;
      os << Y.levels[4][v].label << " " << freq << " vs " << p;
      c.note(os.str());
      c.require(std::abs(freq - p) <= 3 * se, "shape " + Y.levels[4][v].label + " within 3 standard errors");
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(s < 10, "runtime under 10 s");
  });
}

using CriterionFn = CriterionResult (*)(const VerifyOptions&);

struct Suite
{
  const char* key;
  CriterionFn run;
};

inline const std::vector<Suite>& suites()
{
  static const std::vector<Suite> all{
    {"vproj", verify_vproj_census},
    {"catalog", verify_vproj_catalog},
    {"positivity", verify_linearized_positivity},
    {"markov", verify_markov_parametrization},
    {"reflection", verify_reflection_dimension},
    {"gz", verify_gz_structure},
    {"generators", verify_generators},
    {"plancherel", verify_plancherel_triangle},
    {"martingale", verify_martingales},
    {"sampling", verify_sampling},
  };
  return all;
}

/// One line per criterion; timings are left out unless asked for so that
/// the line is reproducible.
inline std::string format_result(const CriterionResult& r, bool with_time = false)
{
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
  if (with_time) {
    os << "  (" << std::fixed;
    os.precision(2);
    os << r.seconds << " s)";
  }
  os << "  " << r.detail;
  return os.str();
}

} // namespace gzwb

#endif // GZWB_VERIFY_HPP
