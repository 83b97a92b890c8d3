// z2e: command-line front end for mod 2 embeddability of graphs and joins.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "z2e/conditions.hpp"
#include "z2e/criterion.hpp"
#include "z2e/delprod.hpp"
#include "z2e/gram.hpp"
#include "z2e/search.hpp"
#include "z2e/vankampen.hpp"

using namespace z2e;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Options {
  std::string complex;
  std::vector<std::string> complexes;
  std::string omega = "I";
  std::size_t beta = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = SearchOptions{}.budget;
  unsigned threads = 1;
  bool json = false;
  std::string matrix_file;
  std::string y_file;
  std::string out_file;
  std::string cert_file;
  std::string kinds = "I,H";
};

Flavor load_flavor(const std::string& spec) {
  static const std::regex inline_graph(R"(graph:\d+:.*)");
  if (spec.rfind("graph:", 0) == 0 && !std::regex_match(spec, inline_graph)) {
    const auto path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return graph_flavor(read_graph(in));
  }
  return flavor_from_descriptor(spec);
}

OmegaSpec omega_spec(const Options& o) {
  if (o.omega != "I" && o.omega != "H") throw std::invalid_argument("--omega must be I or H");
  OmegaSpec s{o.omega == "I" ? OmegaKind::TypeI : OmegaKind::TypeH, o.beta};
  omega_matrix(s);
  return s;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.seed = o.seed;
  s.budget = o.budget;
  s.threads = o.threads;
  return s;
}

Gf2Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

DeletedProduct deleted_product(const Flavor& f) { return DeletedProduct(f.complex); }

// ---------------------------------------------------------------- commands

int cmd_info(const Options& o) {
  const auto f = load_flavor(o.complex);
  Json j;
  j["complex"] = f.descriptor;
  j["kind"] = to_string(f.kind);
  j["dimension"] = f.complex.dim;
  j["vertices"] = f.complex.vertex_count;
  j["top_faces"] = f.complex.face_count();
  j["generators"] = f.generator_count();
  j["basis_size"] = f.basis_size;
  j["disjoint_pairs"] = f.disjoint_pairs.size();
  j["subobjects"] = f.subobjects.size();
  j["relations"] = f.relations.size();
  j["truncated"] = f.truncated;
  std::ostringstream t;
  t << f.descriptor << " (" << to_string(f.kind) << ", dimension " << f.complex.dim << ")\n"
    << "  vertices " << f.complex.vertex_count << ", top faces " << f.complex.face_count() << "\n"
    << "  generators " << f.generator_count() << ", homology basis " << f.basis_size << "\n"
    << "  disjoint generator pairs " << f.disjoint_pairs.size() << ", subobjects " << f.subobjects.size() << "\n";
  if (f.truncated) t << "  enumeration truncated\n";
  emit(o, j, t.str());
  return f.truncated ? kExitUnknown : kExitYes;
}

CycleDims dims_of(const Flavor& f) {
  if (f.join) return cycle_space_dims(*f.join);
  return cycle_space_dims(deleted_product(f));
}

int cmd_dims(const Options& o) {
  const auto f = load_flavor(o.complex);
  const auto d = dims_of(f);
  Json j{{"full", d.full}, {"symmetric", d.symmetric}};
  emit(o, j, f.descriptor + ": full " + std::to_string(d.full) + ", symmetric " + std::to_string(d.symmetric) + "\n");
  return kExitYes;
}

int cmd_delprod(const Options& o) {
  const auto f = load_flavor(o.complex);
  const auto dp = deleted_product(f);
  const auto d = cycle_space_dims(dp);
  Json j{{"complex", f.descriptor}, {"cells", dp.cell_count()}, {"unordered_pairs", dp.unordered().size()},
         {"full", d.full}, {"symmetric", d.symmetric}};
  std::ostringstream t;
  t << f.descriptor << " deleted product: " << dp.cell_count() << " cells (" << dp.unordered().size()
    << " unordered pairs), cycle space " << d.full << ", symmetric " << d.symmetric << "\n";
  emit(o, j, t.str());
  return kExitYes;
}

Gf2Vector random_symmetric_cycle(const DeletedProduct& dp, std::uint64_t seed) {
  const auto basis = cycle_space(dp).symmetric_basis;
  Gf2Vector c = dp.empty_chain();
  std::mt19937_64 rng(seed);
  for (const auto& b : basis)
    if (rng() & 1U) c ^= b;
  if (c.is_zero() && !basis.empty()) c = basis[0];
  return c;
}

std::string octahedron_label(const Octahedron& p) {
  std::string s;
  for (std::size_t i = 0; i < p.pairs.size(); ++i)
    s += (i ? "*" : "") + std::to_string(p.pairs[i][0]) + std::to_string(p.pairs[i][1]);
  return s;
}

int cmd_decompose(const Options& o) {
  const auto f = load_flavor(o.complex);
  const auto dp = deleted_product(f);
  const auto c = random_symmetric_cycle(dp, o.seed);
  Json j;
  j["complex"] = f.descriptor;
  j["seed"] = o.seed;
  j["cycle_cells"] = c.count();
  std::ostringstream t;
  t << f.descriptor << ": random symmetric cycle with " << c.count() << " cells (seed " << o.seed << ")\n";
  bool verified = false;
  if (f.join) {
    const auto g = generator_decomposition(*f.join, dp, c);
    Json tori = Json::array(), triples = Json::array(), mixed = Json::array();
    for (const auto& x : g.tori) tori.push_back({octahedron_label(x.p), octahedron_label(x.q)});
    for (const auto& x : g.triples) {
      std::string s;
      for (std::size_t i = 0; i < x.triples.size(); ++i)
        s += (i ? "*" : "") + std::to_string(x.triples[i][0]) + std::to_string(x.triples[i][1]) + std::to_string(x.triples[i][2]);
      triples.push_back(s);
    }
    for (const auto& x : g.mixed) mixed.push_back({octahedron_label(x.p), octahedron_label(x.q)});
    j["tori"] = tori;
    j["triples"] = triples;
    j["mixed"] = mixed;
    verified = generator_sum(*f.join, dp, g) == c;
    t << "  tori " << g.tori.size() << ", triple deleted products " << g.triples.size();
    if (!g.mixed.empty()) t << ", mixed tori " << g.mixed.size();
    t << "\n";
  } else {
    const auto pieces = graph_symmetric_decomposition(*f.graph, dp, c);
    Json list = Json::array();
    Gf2Vector sum = dp.empty_chain();
    for (const auto& p : pieces) {
      sum ^= graph_generator_cycle(*f.graph, dp, p);
      if (const auto* tor = std::get_if<SymTorus>(&p)) {
        list.push_back({{"type", "torus"}, {"p", tor->p.to_string()}, {"q", tor->q.to_string()}});
        t << "  torus " << tor->p.to_string() << " x " << tor->q.to_string() << "\n";
      } else {
        const auto& e = std::get<EconomicDP>(p);
        list.push_back({{"type", to_string(e.type)}, {"subgraph", e.subgraph.to_string()}});
        t << "  economic " << to_string(e.type) << " " << e.subgraph.to_string() << "\n";
      }
    }
    j["pieces"] = list;
    verified = sum == c;
  }
  j["verified"] = verified;
  t << "  reconstruction " << (verified ? "verified" : "FAILED") << "\n";
  emit(o, j, t.str());
  return verified ? kExitYes : kExitInternal;
}

int cmd_vankampen(const Options& o) {
  const auto f = load_flavor(o.complex);
  const auto ctx = r_prime_context(f, {o.seed});
  const auto d = random_generic_drawing(ctx.dp.complex(), o.seed);
  const auto nu = intersection_cocycle(ctx.dp, d);
  Json pairs = Json::array();
  std::size_t crossing = 0;
  for (auto c : ctx.dp.unordered()) {
    pairs.push_back({ctx.dp.cell(c).first, ctx.dp.cell(c).second, nu.get(c) ? 1 : 0});
    crossing += nu.get(c);
  }
  Json gens = Json::array();
  std::size_t odd = 0;
  for (std::size_t i = 0; i < ctx.cycles.size(); ++i) {
    gens.push_back({{"generator", ctx.labels[i]}, {"v", ctx.v[i] ? 1 : 0}});
    odd += ctx.v[i];
  }
  Json j{{"complex", f.descriptor}, {"seed", o.seed}, {"drawing_attempts", d.attempts},
         {"crossing_pairs", crossing}, {"pairs", pairs}, {"generators", gens}, {"odd_generators", odd}};
  std::ostringstream t;
  t << f.descriptor << ": drawing seed " << o.seed << ", " << crossing << " of " << pairs.size() << " face pairs cross oddly\n"
    << "  van Kampen number 1 on " << odd << " of " << ctx.cycles.size() << " generators\n";
  emit(o, j, t.str());
  return kExitYes;
}

Json first_violation(const CheckResult& r) {
  return r.ok ? Json(nullptr) : Json(r.violations[0]);
}

int cmd_check(const Options& o) {
  const auto f = load_flavor(o.complex);
  if (o.matrix_file.empty() == o.y_file.empty()) throw std::invalid_argument("give exactly one of --matrix and --y");
  Gf2Matrix a;
  if (!o.matrix_file.empty()) {
    const auto m = read_matrix_file(o.matrix_file);
    if (m.rows() != m.cols() || !m.is_symmetric()) throw std::invalid_argument("matrix must be symmetric");
    if (m.rows() == f.generator_count())
      a = m;
    else if (m.rows() == f.basis_size)
      a = bform_expand(f, m);
    else
      throw std::invalid_argument("matrix size fits neither the generators nor the homology basis");
  } else {
    const auto spec = omega_spec(o);
    auto y = read_matrix_file(o.y_file);
    if (y.rows() != spec.beta) throw std::invalid_argument("Y must have beta rows");
    if (y.cols() == f.basis_size && y.cols() != f.generator_count())
      y = y * Gf2Matrix::from_columns(f.generators, f.basis_size);
    if (y.cols() != f.generator_count()) throw std::invalid_argument("Y columns fit neither the generators nor the basis");
    a = gram(y, omega_matrix(spec));
  }
  const auto add = is_additive(f, a);
  const auto ind = is_independent(f, a);
  const auto non = is_nontrivial(f, a, NontrivialMode::All);
  const bool holds = add.ok && ind.ok && non.ok;
  Json j{{"complex", f.descriptor},
         {"additive", add.ok},
         {"independent", ind.ok},
         {"nontrivial", non.ok},
         {"first_violations", {{"additive", first_violation(add)}, {"independent", first_violation(ind)},
                               {"nontrivial", first_violation(non)}}},
         {"inconclusive", f.truncated},
         {"holds", holds && !f.truncated}};
  std::ostringstream t;
  t << f.descriptor << ": additive " << (add.ok ? "yes" : "no") << ", independent " << (ind.ok ? "yes" : "no")
    << ", non-trivial " << (non.ok ? "yes" : "no") << (f.truncated ? " (enumeration truncated)" : "") << "\n";
  emit(o, j, t.str());
  if (f.truncated) return kExitUnknown;
  return holds ? kExitYes : kExitNo;
}

Json decision_json(const Decision& d) {
  Json j{{"verdict", to_string(d.verdict)}, {"method", d.method}, {"exact", d.exact}, {"consistent", d.consistent},
         {"coset_dim", d.coset_dim}, {"evaluations", d.evaluations}};
  j["best_beta"] = d.best_beta ? Json(*d.best_beta) : Json(nullptr);
  if (d.certificate) j["certificate"] = Json::parse(certificate_to_json(*d.certificate));
  return j;
}

int cmd_search(const Options& o) {
  const auto f = load_flavor(o.complex);
  const auto spec = omega_spec(o);
  const auto d = decide(f, spec, search_options(o));
  if (d.certificate && !o.out_file.empty()) {
    std::ofstream out(o.out_file);
    if (!out) throw std::invalid_argument("cannot write '" + o.out_file + "'");
    out << certificate_to_json(*d.certificate) << "\n";
  }
  if (o.json) {
    std::cout << decision_json(d).dump(2) << "\n";
  } else if (d.certificate) {
    std::cout << certificate_to_json(*d.certificate) << "\n";
  } else {
    std::cout << f.descriptor << " with Omega " << to_string(spec.kind) << " beta " << spec.beta << ": "
              << to_string(d.verdict) << " (" << d.method << ")\n";
  }
  switch (d.verdict) {
    case Verdict::Yes:
      return kExitYes;
    case Verdict::No:
      return kExitNo;
    case Verdict::Unknown:
      break;
  }
  return kExitUnknown;
}

int cmd_verify(const Options& o) {
  std::ifstream in(o.cert_file);
  if (!in) throw std::invalid_argument("cannot open certificate '" + o.cert_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const auto cert = certificate_from_json(buf.str());
  const auto f = load_flavor(cert.complex);
  const auto r = verify_certificate(f, cert);
  Json j{{"complex", cert.complex}, {"ok", r.ok}};
  j["first_violation"] = r.ok ? Json(nullptr) : Json(r.first_violation);
  emit(o, j, r.ok ? "certificate verified\n" : "violation: " + r.first_violation + "\n");
  return r.ok ? kExitYes : kExitNo;
}

int cmd_tabulate(const Options& o) {
  std::vector<std::string> specs = o.complexes;
  if (specs.empty()) specs = {"join:3,3", "join:4,4", "join:5,5", "Kn:5", "Kn:6", "Kn:7"};
  std::vector<OmegaKind> kinds;
  std::stringstream ks(o.kinds);
  std::string k;
  while (std::getline(ks, k, ',')) {
    if (k == "I")
      kinds.push_back(OmegaKind::TypeI);
    else if (k == "H")
      kinds.push_back(OmegaKind::TypeH);
    else
      throw std::invalid_argument("--kinds takes I and/or H");
  }
  std::vector<Flavor> family;
  for (const auto& s : specs) family.push_back(load_flavor(s));
  const auto rows = tabulate_min_beta(family, kinds, search_options(o));
  Json arr = Json::array();
  std::ostringstream t;
  t << "complex\tkind\tmin_beta\texact\tcoset_dim\n";
  bool all_exact = true;
  for (const auto& r : rows) {
    arr.push_back({{"complex", r.complex}, {"kind", to_string(r.kind)},
                   {"min_beta", r.min_beta ? Json(*r.min_beta) : Json(nullptr)}, {"exact", r.exact},
                   {"coset_dim", r.coset_dim}});
    t << r.complex << "\t" << to_string(r.kind) << "\t" << (r.min_beta ? std::to_string(*r.min_beta) : "none") << "\t"
      << (r.exact ? "yes" : "no") << "\t" << r.coset_dim << "\n";
    all_exact = all_exact && r.exact;
  }
  emit(o, arr, t.str());
  return all_exact ? kExitYes : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mod 2 embeddability of graphs and joinpowers"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool needs_complex) {
    auto* c = s->add_option("--complex", o.complex, "join:n1,..|Kn:n|K33|K5|tildeK:n|graph:FILE|graph:V:u-v,..");
    if (needs_complex) c->required();
    s->add_option("--seed", o.seed, "random seed");
    s->add_option("--budget", o.budget, "objective evaluations allowed");
    s->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1U, 256U));
    s->add_flag("--json", o.json, "machine-readable output");
  };

  std::string command;
  auto* info = app.add_subcommand("info", "sizes of the generator structure");
  common(info, true);
  auto* dims = app.add_subcommand("dims", "dimensions of the cycle spaces of the deleted product");
  common(dims, true);
  auto* decompose = app.add_subcommand("decompose", "decompose a random symmetric cycle into generators");
  common(decompose, true);
  auto* delprod = app.add_subcommand("delprod", "deleted product summary");
  common(delprod, true);
  auto* vk = app.add_subcommand("vankampen", "intersection cocycle and van Kampen numbers of the generators");
  common(vk, true);
  auto* check = app.add_subcommand("check", "check the matrix conditions");
  common(check, true);
  check->add_option("--matrix", o.matrix_file, "symmetric matrix file (generators or homology basis)");
  check->add_option("--y", o.y_file, "beta x columns matrix file");
  check->add_option("--omega", o.omega, "I or H");
  check->add_option("--beta", o.beta, "beta");
  auto* search = app.add_subcommand("search", "decide embeddability for one Omega and beta");
  common(search, true);
  search->add_option("--omega", o.omega, "I or H")->required();
  search->add_option("--beta", o.beta, "beta")->required();
  search->add_option("--out", o.out_file, "write the certificate here");
  auto* verify = app.add_subcommand("verify", "verify a certificate file");
  common(verify, false);
  verify->add_option("certificate", o.cert_file, "certificate JSON")->required();
  auto* tab = app.add_subcommand("tabulate", "minimal beta per complex and Omega type");
  tab->add_option("--complex", o.complexes, "complexes (repeatable)");
  tab->add_option("--kinds", o.kinds, "I,H");
  tab->add_option("--seed", o.seed, "random seed");
  tab->add_option("--budget", o.budget, "objective evaluations allowed");
  tab->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1U, 256U));
  tab->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info) return cmd_info(o);
    if (*dims) return cmd_dims(o);
    if (*decompose) return cmd_decompose(o);
    if (*delprod) return cmd_delprod(o);
    if (*vk) return cmd_vankampen(o);
    if (*check) return cmd_check(o);
    if (*search) return cmd_search(o);
    if (*verify) return cmd_verify(o);
    if (*tab) return cmd_tabulate(o);
  } catch (const DegenerateDrawing& e) {
    std::cerr << "z2e: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const ConsistencyError& e) {
    std::cerr << "z2e: internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "z2e: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
