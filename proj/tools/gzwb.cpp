// Command-line front end: every computation and check as a subcommand.
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include "gzwb/bratteli.hpp"
#include "gzwb/serialization.hpp"
#include "gzwb/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gzwb;

namespace {

struct UsageError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct Failure : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

void write_text(const std::string& path, const std::string& text)
{
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string cycles(const FiniteGroup& G, const std::vector<Index>& xs)
{
  std::string s;
  for (Index x : xs) s += (s.empty() ? "" : " ") + G.element(x).cycle_notation();
  return s;
}

/// --sym N gives (S_N, S_{N-1}); otherwise --group with --subgroup-gens
/// (cycles separated by ';') or the stabilizer of the largest point.
PairPtr resolve_pair(int sym, const std::string& group, const std::string& subgroup_gens)
{
  if (sym > 0) {
    if (sym < 2) throw UsageError("--sym must be at least 2");
    return make_pair(symmetric_group(sym), symmetric_group(sym - 1));
  }
  if (group.empty()) throw UsageError("give --sym or --group");
  auto G = group_by_name(group);
  std::vector<Index> members;
  if (subgroup_gens.empty()) {
    for (Index g = 0; g < G->order(); ++g) {
      if (G->element(g)(G->degree()) == G->degree()) members.push_back(g);
    }
  } else {
    std::vector<Permutation> gens;
    std::stringstream ss(subgroup_gens);
    std::string item;
    while (std::getline(ss, item, ';')) gens.push_back(Permutation::parse_cycles(G->degree(), item));
    auto H = FiniteGroup::generated_by(G->degree(), gens);
    for (const auto& h : H.elements()) {
      auto idx = G->find(h);
      if (!idx) throw UsageError("--subgroup-gens: " + h.cycle_notation() + " is not in " + group);
      members.push_back(*idx);
    }
    std::sort(members.begin(), members.end());
  }
  return make_pair(G, subgroup_from_indices(*G, members, "H"));
}

/// Expectation on (S_n, S_{n-1}) of the requested kind.
GeneralizedExpectation build_expectation(int n, const std::string& kind, std::size_t k_index, const std::string& markov)
{
  if (n < 2 || n > 6) throw UsageError("--sym must be in 2..6");
  if (kind == "plancherel") return plancherel_expectation(make_pair(symmetric_group(n), symmetric_group(n - 1)));
  if (kind == "vproj") {
    auto vps = find_virtual_projections(make_pair(symmetric_group(n), symmetric_group(n - 1)));
    if (k_index >= vps.size()) throw UsageError("--k-index out of range, " + std::to_string(vps.size()) + " solutions");
    return linearize(vps[k_index]);
  }
  if (kind == "markov") {
    if (markov.empty()) throw UsageError("--kind markov needs --markov FILE");
    auto cp = concrete_pair_sym(n);
    return expectation_from_markov(cp, markov_matrix_from_json(read_json(markov)));
  }
  throw UsageError("--kind must be plancherel, vproj or markov");
}

ExpectationChain build_chain(int n, const std::string& family)
{
  if (n < 2 || n > 5) throw UsageError("--sym must be in 2..5");
  auto chain = symmetric_chain(n);
  if (family == "plancherel") return plancherel_chain(chain);
  if (family == "vproj") return virtual_projection_chain(chain);
  throw UsageError("--family must be plancherel or vproj");
}

Json axiom_json(const AxiomReport& r)
{
  Json j{{"projection_onto_B", r.projection_onto_B}, {"bimodule", r.bimodule},   {"star_compatible", r.star_compatible},
         {"unital", r.unital},                       {"positive", r.positive},   {"exhaustive", r.exhaustive},
         {"positivity_checks", r.positivity_checks}, {"generalized", r.generalized()}};
  if (r.witness) j["witness"] = terms_to_json(*r.witness);
  return j;
}

MarkovSystem markov_for(int n, bool signed_entries, std::uint64_t seed)
{
  auto Y = young_lattice(n);
  if (!signed_entries) return plancherel_system(Y);
  std::mt19937_64 rng(seed);
  return random_markov_system(Y, rng, true);
}

Tower random_tower(const ExpectationChain& E, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  return tower_from_top(E, random_element(E.chain.top(), rng, 6));
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact computations with group algebras, expectations and GZ algebras"};
  app.require_subcommand(1);
  int sym = 0, n = 4, max_n = 6, level = 1;
  std::uint64_t seed = 1;
  std::size_t count = 100000, k_index = 0;
  std::string group, subgroup_gens, kind = "plancherel", family = "plancherel", markov_file, path, out, in_file,
              side = "left", export_kind = "diagram", suite = "all";
  bool timing = false, check = false, signed_entries = false, require_positive = false, as_json = false;

  std::function<void()> action;
  auto on = [&](CLI::App* cmd, std::function<void()> f) { cmd->callback([&action, f] { action = f; }); };

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "symmetric chain S_1 < ... < S_N");
  chain_cmd->add_option("--sym", sym, "N")->required();
  on(chain_cmd, [&] {
    auto ch = symmetric_chain(sym);
    Json levels = Json::array();
    for (std::size_t k = 0; k < ch.size(); ++k) {
      levels.push_back({{"level", k + 1}, {"order", ch.group(k)->order()},
                        {"index", k ? ch.step(k)->index() : 1}});
    }
    print({{"levels", levels}});
  });

  // vproj
  auto* vproj = app.add_subcommand("vproj", "virtual projections");
  vproj->require_subcommand(1);
  for (const char* name : {"find", "check"}) {
    auto* cmd = vproj->add_subcommand(name, std::string(name) + " virtual projections of a pair");
    cmd->add_option("--sym", sym, "pair (S_N, S_N-1)");
    cmd->add_option("--group", group, "catalog group: Sn An Cn Dn Q8 V4 Z2xZ4");
    cmd->add_option("--subgroup-gens", subgroup_gens, "generators as cycles separated by ';' (default: point stabilizer)");
    const bool is_check = std::string(name) == "check";
    on(cmd, [&, is_check] {
      auto pair = resolve_pair(sym, group, subgroup_gens);
      auto vps = find_virtual_projections(pair);
      Json sols = Json::array();
      bool ok = true;
      for (const auto& vp : vps) {
        Json s{{"K", cycles(pair->G(), vp.K)}};
        if (is_check) {
          bool id = satisfies_projection_identities(vp) && preimage_of_identity(vp.projection) == vp.K;
          ok = ok && id;
          s["identities"] = id;
        }
        sols.push_back(s);
      }
      print({{"group", pair->G().name()}, {"order", pair->G().order()}, {"subgroup_order", pair->H().order()},
             {"count", vps.size()}, {"solutions", sols}});
      if (!ok) throw Failure("projection identities fail");
    });
  }

  // expect
  auto* expect = app.add_subcommand("expect", "expectations C(S_N) -> C(S_N-1)");
  expect->require_subcommand(1);
  for (const char* name : {"build", "verify", "extract"}) {
    auto* cmd = expect->add_subcommand(name, name);
    cmd->add_option("--sym", sym, "N")->required();
    cmd->add_option("--kind", kind, "plancherel | vproj | markov")->capture_default_str();
    cmd->add_option("--k-index", k_index, "which virtual projection")->capture_default_str();
    cmd->add_option("--markov", markov_file, "Markov matrix JSON for --kind markov");
    cmd->add_option("--seed", seed, "sampling seed")->capture_default_str();
    const std::string which = name;
    if (which == "build") cmd->add_option("--out", out, "write JSON here instead of stdout");
    if (which == "verify") cmd->add_flag("--require-positive", require_positive, "fail unless positive");
    on(cmd, [&, which] {
      auto P = build_expectation(sym, kind, k_index, markov_file);
      if (which == "build") {
        auto text = expectation_to_json(P).dump(2) + "\n";
        if (out.empty()) std::cout << text;
        else write_text(out, text);
      } else if (which == "verify") {
        AxiomOptions ao;
        ao.seed = seed;
        ao.extra_candidates = central_idempotents_sym(P.pair()->ambient(), sym);
        auto r = verify_axioms(P, ao);
        print(axiom_json(r));
        if (!r.generalized() || (require_positive && !r.positive)) throw Failure("axioms fail");
      } else {
        print(markov_matrix_to_json(markov_from_expectation(concrete_pair_sym(sym), P)));
      }
    });
  }

  // basic construction
  auto* bc = app.add_subcommand("basic-construction", "algebra generated by C(S_N) and P in END(C(S_N))");
  bc->add_option("--sym", sym, "N (2..4)")->required();
  bc->add_option("--kind", kind, "plancherel | vproj | markov")->capture_default_str();
  bc->add_option("--k-index", k_index, "which virtual projection")->capture_default_str();
  bc->add_option("--markov", markov_file, "Markov matrix JSON for --kind markov");
  on(bc, [&] {
    if (sym > 4) throw UsageError("--sym must be at most 4");
    auto P = build_expectation(sym, kind, k_index, markov_file);
    auto emb = embedding_diagram_sym(sym);
    auto tri = basic_construction_diagram(emb);
    auto E = basic_construction_concrete(P);
    long predicted = tri.E.dimension();
    print({{"dim", E.operators.dim()}, {"predicted", predicted}, {"blocks", tri.E.blocks}});
    if (static_cast<long>(E.operators.dim()) != predicted) throw Failure("dimension differs from the reflection formula");
  });

  // gz
  auto* gz = app.add_subcommand("gz", "Gelfand-Tsetlin algebras of the symmetric chain");
  gz->require_subcommand(1);
  auto* gz_dim = gz->add_subcommand("dim", "dimension of GZ_N");
  gz_dim->add_option("--sym", sym, "N (1..6)")->required();
  on(gz_dim, [&] {
    if (sym < 1 || sym > 6) throw UsageError("--sym must be in 1..6");
    std::cout << gz_algebra(symmetric_chain(sym), sym).dim() << "\n";
  });
  auto* gz_basis_cmd = gz->add_subcommand("basis", "GZ idempotents with content vectors");
  gz_basis_cmd->add_option("--n", n, "N (1..5)")->capture_default_str();
  gz_basis_cmd->add_flag("--json", as_json, "JSON output with the idempotents");
  on(gz_basis_cmd, [&] {
    if (n < 1 || n > 5) throw UsageError("--n must be in 1..5");
    auto basis = gz_basis(n);
    Json arr = Json::array();
    for (const auto& v : basis) {
      if (as_json) {
        arr.push_back({{"path", gz_path_label(v.path)}, {"contents", v.contents}, {"idempotent", terms_to_json(v.idempotent)}});
      } else {
        std::cout << gz_path_label(v.path) << "\t" << Json(v.contents).dump() << "\t" << v.idempotent.support_size() << "\n";
      }
    }
    if (as_json) print(arr);
  });
  auto* gz_t4 = gz->add_subcommand("theorem4", "generators of GZ_N from virtual projections");
  gz_t4->add_option("--sym", sym, "N (2..5)")->required();
  on(gz_t4, [&] {
    if (sym < 2 || sym > 5) throw UsageError("--sym must be in 2..5");
    auto r = verify_theorem4(symmetric_chain(sym));
    Json j{{"commute", r.commute},      {"generates", r.generates},           {"proof_step", r.proof_step},
           {"gz_dim", r.gz_dim},        {"kappa_dim", r.kappa_dim},           {"failures", r.failures},
           {"alternatives", r.alternatives}, {"alternative_failures", r.alternative_failures}};
    if (r.kernel_reading_dim) j["kernel_reading_dim"] = *r.kernel_reading_dim;
    print(j);
    if (!r.passed()) throw Failure("generator checks fail");
  });

  // bratteli
  auto* br = app.add_subcommand("bratteli", "Young's lattice and the Plancherel system");
  br->require_subcommand(1);
  auto* br_build = br->add_subcommand("build", "diagram JSON");
  br_build->add_option("--n", n, "depth (0..8)")->capture_default_str();
  on(br_build, [&] { print(diagram_to_json(young_lattice(n))); });
  auto* br_measure = br->add_subcommand("measure", "cylinder measure of a path");
  br_measure->add_option("--n", n, "depth (0..8)")->capture_default_str();
  br_measure->add_option("--path", path, "shapes joined by '>', e.g. (1)>(2)>(2,1)")->required();
  br_measure->add_flag("--signed", signed_entries, "use a seeded signed system instead of Plancherel");
  br_measure->add_option("--seed", seed, "seed for --signed")->capture_default_str();
  on(br_measure, [&] {
    auto L = markov_for(n, signed_entries, seed);
    std::cout << to_string(cylinder_measure(L, parse_path(L.diagram, path))) << "\n";
  });
  auto* br_sample = br->add_subcommand("sample", "one Plancherel path");
  br_sample->add_option("--n", n, "depth (0..8)")->capture_default_str();
  br_sample->add_option("--seed", seed, "seed")->capture_default_str();
  on(br_sample, [&] {
    auto L = plancherel_system(young_lattice(n));
    std::cout << path_label(L.diagram, sample_path(L, static_cast<std::size_t>(n), seed)) << "\n";
  });

  auto* pl = app.add_subcommand("plancherel", "Plancherel growth");
  pl->require_subcommand(1);
  auto* pl_sample = pl->add_subcommand("sample", "TSV of sampled shape frequencies");
  pl_sample->add_option("--n", n, "depth (0..8)")->capture_default_str();
  pl_sample->add_option("--count", count, "number of samples")->capture_default_str();
  pl_sample->add_option("--seed", seed, "seed")->capture_default_str();
  on(pl_sample, [&] {
    auto L = plancherel_system(young_lattice(n));
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> hits(L.diagram.width(static_cast<std::size_t>(n)), 0);
    for (std::size_t s = 0; s < count; ++s) ++hits[sample_path(L, static_cast<std::size_t>(n), rng).end()];
    auto exact = shape_marginals(L, static_cast<std::size_t>(n));
    std::cout << "shape\tcount\tfrequency\texact\n";
    for (std::size_t v = 0; v < hits.size(); ++v) {
      std::cout << L.diagram.levels[static_cast<std::size_t>(n)][v].label << "\t" << hits[v] << "\t"
                << static_cast<double>(hits[v]) / static_cast<double>(count) << "\t" << to_string(exact[v]) << "\n";
    }
  });

  // martingale
  auto* mart = app.add_subcommand("martingale", "GZ towers as martingales");
  mart->require_subcommand(1);
  auto* mart_check = mart->add_subcommand("check", "random GZ tower mapped to a martingale and checked");
  mart_check->add_option("--sym", sym, "depth N (2..5)")->required();
  mart_check->add_option("--family", family, "plancherel | vproj")->capture_default_str();
  mart_check->add_option("--seed", seed, "seed")->capture_default_str();
  mart_check->add_option("--out", out, "write the martingale JSON here");
  on(mart_check, [&] {
    auto E = build_chain(sym, family);
    auto S = gz_path_system(E);
    std::mt19937_64 rng(seed);
    AlgebraElement top(E.chain.top());
    for (const auto& b : gz_algebra(E.chain, sym).basis()) top += Rational(static_cast<long>(rng() % 7) - 3) * b;
    auto M = gz_tower_to_martingale(S, tower_from_top(E, top));
    bool ok = is_martingale(S.markov, M);
    if (!out.empty()) write_text(out, martingale_to_json(S.markov.diagram, M).dump(2) + "\n");
    print({{"martingale", ok}, {"true_system", S.markov.is_true()}, {"paths", M.levels.back().size()}});
    if (!ok) throw Failure("not a martingale");
  });

  // tower
  auto* tower = app.add_subcommand("tower", "finite-depth towers");
  tower->require_subcommand(1);
  auto* tower_verify_cmd = tower->add_subcommand("verify", "random downward tower");
  auto* tower_act_cmd = tower->add_subcommand("act", "bimodule action on a random tower");
  for (auto* cmd : {tower_verify_cmd, tower_act_cmd}) {
    cmd->add_option("--sym", sym, "depth N (2..5)")->required();
    cmd->add_option("--family", family, "plancherel | vproj")->capture_default_str();
    cmd->add_option("--seed", seed, "seed")->capture_default_str();
    cmd->add_option("--in", in_file, "tower JSON instead of a random one");
  }
  tower_act_cmd->add_option("--level", level, "b lives in C(S_level)")->capture_default_str();
  tower_act_cmd->add_option("--side", side, "left | right")->capture_default_str();
  auto load_tower = [&](const ExpectationChain& E) {
    if (in_file.empty()) return random_tower(E, seed);
    auto T = tower_from_json(read_json(in_file));
    for (std::size_t k = 0; k < T.elements.size() && k < E.depth(); ++k) T.elements[k] = transfer(T.elements[k], E.chain.group(k));
    return T;
  };
  on(tower_verify_cmd, [&] {
    auto E = build_chain(sym, family);
    bool ok = tower_verify(E, load_tower(E));
    print({{"tower", ok}});
    if (!ok) throw Failure("not a tower");
  });
  on(tower_act_cmd, [&] {
    auto E = build_chain(sym, family);
    if (side != "left" && side != "right") throw UsageError("--side must be left or right");
    if (level < 1 || level > sym) throw UsageError("--level must be in 1..N");
    auto T = load_tower(E);
    std::mt19937_64 rng(seed + 1);
    auto b = random_element(E.chain.group(static_cast<std::size_t>(level - 1)), rng, 3);
    auto R = tower_act(E, static_cast<std::size_t>(level), b, side == "left" ? Side::left : Side::right, T);
    print({{"b", terms_to_json(b)}, {"tower", tower_verify(E, R)}, {"result", tower_to_json(R)}});
  });

  // verify
  auto* ver = app.add_subcommand("verify", "run acceptance checks");
  std::string suite_help = "all";
  for (const auto& s : suites()) suite_help += std::string(" | ") + s.key;
  ver->add_option("suite", suite, suite_help)->capture_default_str();
  ver->add_option("--max-n", max_n, "largest symmetric group degree")->capture_default_str();
  ver->add_option("--seed", seed, "seed")->capture_default_str();
  ver->add_flag("--timing", timing, "append timings (output no longer reproducible)");
  on(ver, [&] {
    if (max_n < 2 || max_n > 6) throw UsageError("--max-n must be in 2..6");
    VerifyOptions vo{max_n, seed};
    bool found = false, ok = true;
    for (const auto& s : suites()) {
      if (suite != "all" && suite != s.key) continue;
      found = true;
      auto r = s.run(vo);
      std::cout << format_result(r, timing) << std::endl;
      ok = ok && r.passed;
    }
    if (!found) throw UsageError("unknown suite " + suite);
    if (!ok) throw Failure("some checks failed");
  });

  // export
  auto* exp = app.add_subcommand("export", "write re-importable JSON");
  exp->add_option("--kind", export_kind, "diagram | markov | martingale")->capture_default_str();
  exp->add_option("--n", n, "depth")->capture_default_str();
  exp->add_flag("--signed", signed_entries, "signed Markov system (markov kind)");
  exp->add_option("--family", family, "plancherel | vproj (martingale kind)")->capture_default_str();
  exp->add_option("--seed", seed, "seed")->capture_default_str();
  exp->add_option("--out", out, "output file")->required();
  exp->add_flag("--check", check, "re-import and compare");
  on(exp, [&] {
    std::string text;
    std::function<std::string(const Json&)> reimport;
    if (export_kind == "diagram") {
      text = diagram_to_json(young_lattice(n)).dump(2);
      reimport = [](const Json& j) { return diagram_to_json(diagram_from_json(j)).dump(2); };
    } else if (export_kind == "markov") {
      text = markov_system_to_json(markov_for(n, signed_entries, seed)).dump(2);
      reimport = [](const Json& j) { return markov_system_to_json(markov_system_from_json(j)).dump(2); };
    } else if (export_kind == "martingale") {
      auto E = build_chain(n, family);
      auto S = gz_path_system(E);
      std::mt19937_64 rng(seed);
      AlgebraElement top(E.chain.top());
      for (const auto& b : gz_algebra(E.chain, n).basis()) top += Rational(static_cast<long>(rng() % 7) - 3) * b;
      auto M = gz_tower_to_martingale(S, tower_from_top(E, top));
      Json j{{"markov", markov_system_to_json(S.markov)}, {"martingale", martingale_to_json(S.markov.diagram, M)}};
      text = j.dump(2);
      reimport = [](const Json& j) {
        auto L = markov_system_from_json(j.at("markov"));
        auto M = martingale_from_json(L.diagram, j.at("martingale"));
        if (!is_martingale(L, M)) throw Failure("re-imported martingale fails the check");
        return Json{{"markov", markov_system_to_json(L)}, {"martingale", martingale_to_json(L.diagram, M)}}.dump(2);
      };
    } else {
      throw UsageError("--kind must be diagram, markov or martingale");
    }
    write_text(out, text + "\n");
    if (check) {
      if (reimport(read_json(out)) != text) throw Failure("round trip changed the data");
      std::cout << "round trip ok\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (action) action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Failure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
