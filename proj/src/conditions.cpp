#include "z2e/conditions.hpp"

#include "z2e/delprod.hpp"

#include <array>
#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace z2e {

const char* to_string(FlavorKind k) {
  switch (k) {
    case FlavorKind::Join: return "join";
    case FlavorKind::CompleteGraph: return "complete-graph";
    case FlavorKind::Graph: return "graph";
  }
  return "?";
}

namespace {

std::string set_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string octahedron_label(const Octahedron& p) {
  std::string out;
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    if (i) out += '*';
    out += set_label({p.pairs[i][0], p.pairs[i][1]});
  }
  return out;
}

std::string triple_label(const TripleSubcomplex& x) {
  std::string out;
  for (std::size_t i = 0; i < x.triples.size(); ++i) {
    if (i) out += '*';
    out += set_label({x.triples[i][0], x.triples[i][1], x.triples[i][2]});
  }
  return out;
}

std::string tuple_label(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

GeneratorPair ordered(std::size_t a, std::size_t b) { return a < b ? GeneratorPair{a, b} : GeneratorPair{b, a}; }

// relations from the kernel of the coordinate map
std::vector<std::vector<std::size_t>> kernel_relations(const std::vector<Gf2Vector>& gens, std::size_t h) {
  const auto e = Gf2Matrix::from_columns(gens, h);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& k : kernel_basis(e)) out.push_back(k.support());
  return out;
}

}  // namespace

Flavor join_flavor(const JoinComplex& j) {
  Flavor f;
  f.kind = FlavorKind::Join;
  f.descriptor = j.descriptor();
  f.join = j;
  f.complex = top_complex(j);

  const auto octs = j.octahedra();
  for (const auto& p : octs) {
    f.generator_labels.push_back(octahedron_label(p));
    f.generators.push_back(basis_coordinates(j, j.chain(p)));
  }
  const auto basis = cycle_space_basis(j);
  f.basis_size = basis.size();
  for (const auto& p : basis) {
    f.basis_chains.push_back(j.chain(p));
    f.basis_generators.push_back(j.octahedron_index(p));
  }

  for (std::size_t a = 0; a < octs.size(); ++a)
    for (std::size_t b = a + 1; b < octs.size(); ++b)
      if (vertex_disjoint(octs[a], octs[b])) f.disjoint_pairs.emplace_back(a, b);

  // K*{u,v} + K*{v,w} + K*{w,u} in each coordinate
  const auto& sizes = j.sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (const auto& t : subsets(sizes[i], 3))
      for (const auto& p : octs) {
        if (p.pairs[i] != std::array<int, 2>{t[0], t[1]}) continue;
        std::vector<std::size_t> rel;
        for (const auto& pr : {std::array<int, 2>{t[0], t[1]}, std::array<int, 2>{t[1], t[2]}, std::array<int, 2>{t[0], t[2]}}) {
          Octahedron q = p;
          q.pairs[i] = pr;
          rel.push_back(j.octahedron_index(q));
        }
        f.relations.push_back(std::move(rel));
      }

  for (const auto& x : j.triple_subcomplexes()) {
    Subobject s;
    s.label = triple_label(x);
    for (auto face : j.top_faces(x)) {
      const auto e = j.top_face(face);
      s.witness_labels.push_back(tuple_label(e));
      std::vector<GeneratorPair> pairs;
      for (const auto& [p, q] : complementary_pairs(x, e)) pairs.push_back(ordered(j.octahedron_index(p), j.octahedron_index(q)));
      s.witnesses.push_back(std::move(pairs));
    }
    f.subobjects.push_back(std::move(s));
  }
  return f;
}

Flavor complete_graph_flavor(int n) {
  if (n < 3) throw std::invalid_argument("complete_graph_flavor: n must be at least 3");
  Flavor f;
  f.kind = FlavorKind::CompleteGraph;
  f.descriptor = "Kn:" + std::to_string(n);
  const Graph g = complete_graph(n);
  f.graph = g;
  f.complex = top_complex(g);

  const auto st = kn_structures(n);
  const auto fc = fundamental_cycles(g);
  f.basis_size = fc.size();
  std::map<std::vector<int>, std::size_t> index;
  std::map<Gf2Vector, std::size_t> by_chain;
  for (const auto& t : st.triples) {
    Gf2Vector c(g.edge_count());
    c.set(g.edge_index(t[0], t[1]));
    c.set(g.edge_index(t[0], t[2]));
    c.set(g.edge_index(t[1], t[2]));
    index[t] = f.generators.size();
    by_chain[c] = f.generators.size();
    f.generator_labels.push_back(set_label(t));
    f.generators.push_back(fundamental_coordinates(fc, c));
  }
  for (const auto& b : fc) {
    const auto it = by_chain.find(b.cycle);
    if (it == by_chain.end()) throw ConsistencyError("complete_graph_flavor: fundamental cycle is not a triangle");
    f.basis_chains.push_back(b.cycle);
    f.basis_generators.push_back(it->second);
  }

  for (std::size_t a = 0; a < st.triples.size(); ++a)
    for (std::size_t b = a + 1; b < st.triples.size(); ++b) {
      const auto& p = st.triples[a];
      const auto& q = st.triples[b];
      if (std::none_of(p.begin(), p.end(), [&](int v) { return std::find(q.begin(), q.end(), v) != q.end(); }))
        f.disjoint_pairs.emplace_back(a, b);
    }

  for (const auto& quad : st.quads) {
    std::vector<std::size_t> rel;
    for (int drop : quad) {
      std::vector<int> t;
      for (int v : quad)
        if (v != drop) t.push_back(v);
      rel.push_back(index.at(t));
    }
    f.relations.push_back(std::move(rel));
  }

  for (const auto& five : st.quints) {
    Subobject s;
    s.label = set_label(five);
    for (int v : five) {
      s.witness_labels.push_back(std::to_string(v));
      std::vector<GeneratorPair> pairs;
      for (const auto& [p, q] : kn_complementary_pairs(five, v)) pairs.push_back(ordered(index.at(p), index.at(q)));
      s.witnesses.push_back(std::move(pairs));
    }
    f.subobjects.push_back(std::move(s));
  }
  return f;
}

Flavor graph_flavor(const Graph& g, const GraphFlavorLimits& limits) {
  Flavor f;
  f.kind = FlavorKind::Graph;
  f.descriptor = "graph:" + std::to_string(g.vertex_count()) + ":";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    f.descriptor += (e ? "," : "") + std::to_string(g.edge(e).first) + "-" + std::to_string(g.edge(e).second);
  f.graph = g;
  f.complex = top_complex(g);

  const auto fc = fundamental_cycles(g);
  f.basis_size = fc.size();
  std::map<Gf2Vector, std::size_t> index;
  auto add = [&](const Gf2Vector& c) {
    const auto [it, fresh] = index.try_emplace(c, f.generators.size());
    if (fresh) {
      f.generator_labels.push_back(c.to_string());
      f.generators.push_back(fundamental_coordinates(fc, c));
    }
    return it->second;
  };
  for (const auto& b : fc) {
    f.basis_chains.push_back(b.cycle);
    f.basis_generators.push_back(add(b.cycle));
  }

  Gf2Vector all(g.edge_count());
  for (std::size_t e = 0; e < all.size(); ++e) all.set(e);
  const auto sc = simple_cycles(g, all, limits.max_cycles);
  f.truncated = f.truncated || sc.truncated;
  std::vector<std::vector<char>> on(sc.cycles.size(), std::vector<char>(g.vertex_count(), 0));
  for (std::size_t c = 0; c < sc.cycles.size(); ++c)
    for (auto e : sc.cycles[c].support()) {
      on[c][static_cast<std::size_t>(g.edge(e).first)] = 1;
      on[c][static_cast<std::size_t>(g.edge(e).second)] = 1;
    }
  std::set<GeneratorPair> disjoint;
  for (std::size_t a = 0; a < sc.cycles.size(); ++a)
    for (std::size_t b = a + 1; b < sc.cycles.size(); ++b) {
      bool meet = false;
      for (std::size_t v = 0; v < g.vertex_count() && !meet; ++v) meet = on[a][v] && on[b][v];
      if (!meet) disjoint.insert(ordered(add(sc.cycles[a]), add(sc.cycles[b])));
    }
  f.disjoint_pairs.assign(disjoint.begin(), disjoint.end());

  const auto kur = kuratowski_subgraphs(g, limits.kuratowski);
  f.truncated = f.truncated || kur.truncated;
  for (const auto& k : kur.subgraphs) {
    Subobject s;
    const auto& bv = k.branch_vertices;
    const auto& paths = k.branch_paths;
    if (k.type == HomeoType::K5) {
      s.label = "K5" + set_label(bv) + ":" + k.edges.to_string();
      auto path = [&](int a, int b) -> const Gf2Vector& {
        return paths[pair_index(std::min(a, b), std::max(a, b), 5)];
      };
      auto triangle = [&](int a, int b, int c) { return path(a, b) ^ path(b, c) ^ path(a, c); };
      for (int v = 0; v < 5; ++v) {
        std::vector<int> o;
        for (int u = 0; u < 5; ++u)
          if (u != v) o.push_back(u);
        s.witness_labels.push_back(std::to_string(bv[static_cast<std::size_t>(v)]));
        std::vector<GeneratorPair> pairs;
        for (const auto& q : {std::array<int, 4>{o[0], o[1], o[2], o[3]}, std::array<int, 4>{o[0], o[2], o[1], o[3]},
                              std::array<int, 4>{o[0], o[3], o[1], o[2]}})
          pairs.push_back(ordered(add(triangle(v, q[0], q[1])), add(triangle(v, q[2], q[3]))));
        s.witnesses.push_back(std::move(pairs));
      }
    } else {
      s.label = "K33" + set_label(bv) + ":" + k.edges.to_string();
      auto square = [&](int a1, int a2, int b1, int b2) {
        return paths[static_cast<std::size_t>(a1 * 3 + b1)] ^ paths[static_cast<std::size_t>(a1 * 3 + b2)] ^
               paths[static_cast<std::size_t>(a2 * 3 + b1)] ^ paths[static_cast<std::size_t>(a2 * 3 + b2)];
      };
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          std::vector<int> ao, bo;
          for (int x = 0; x < 3; ++x) {
            if (x != a) ao.push_back(x);
            if (x != b) bo.push_back(x);
          }
          s.witness_labels.push_back(std::to_string(bv[static_cast<std::size_t>(a)]) + "-" +
                                     std::to_string(bv[static_cast<std::size_t>(3 + b)]));
          s.witnesses.push_back({ordered(add(square(a, ao[0], b, bo[0])), add(square(a, ao[1], b, bo[1]))),
                                 ordered(add(square(a, ao[0], b, bo[1])), add(square(a, ao[1], b, bo[0])))});
        }
    }
    f.subobjects.push_back(std::move(s));
  }
  f.relations = kernel_relations(f.generators, f.basis_size);
  return f;
}

// ---------------------------------------------------------------- BForm coordinates

std::size_t form_variable_count(std::size_t h) { return h * (h + 1) / 2; }

std::size_t form_variable(std::size_t i, std::size_t j, std::size_t h) {
  if (i > j) std::swap(i, j);
  // rows 0..i-1 hold h, h-1, ..., h-i+1 entries
  return i * h - i * (i - 1) / 2 + (j - i);
}

Gf2Vector form_to_variables(const Gf2Matrix& b) {
  if (!b.is_symmetric()) throw std::invalid_argument("form_to_variables: matrix is not symmetric");
  const std::size_t h = b.rows();
  Gf2Vector v(form_variable_count(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j)
      if (b.get(i, j)) v.set(form_variable(i, j, h));
  return v;
}

Gf2Matrix form_from_variables(const Gf2Vector& vars, std::size_t h) {
  if (vars.size() != form_variable_count(h)) throw std::invalid_argument("form_from_variables: wrong length");
  Gf2Matrix b(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j)
      if (vars.get(form_variable(i, j, h))) {
        b.set(i, j);
        b.set(j, i);
      }
  return b;
}

Gf2Vector pairing_functional(const Gf2Vector& u, const Gf2Vector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("pairing_functional: length mismatch");
  const std::size_t h = u.size();
  Gf2Vector out(form_variable_count(h));
  for (auto i : u.support())
    for (auto j : v.support()) out.flip(form_variable(i, j, h));
  return out;
}

bool pairing(const Gf2Matrix& b, const Gf2Vector& u, const Gf2Vector& v) { return u.dot(b * v); }

LinearConditions linear_conditions(const Flavor& f) {
  LinearConditions lc;
  lc.h = f.basis_size;
  auto fn = [&](const GeneratorPair& p) { return pairing_functional(f.generators[p.first], f.generators[p.second]); };
  for (const auto& p : f.disjoint_pairs) lc.independence.push_back(fn(p));
  for (const auto& s : f.subobjects) {
    std::vector<Gf2Vector> per;
    for (const auto& w : s.witnesses) {
      Gf2Vector sum(form_variable_count(lc.h));
      for (const auto& p : w) sum ^= fn(p);
      per.push_back(std::move(sum));
    }
    lc.nontriviality.push_back(std::move(per));
  }
  return lc;
}

// ---------------------------------------------------------------- generator-indexed matrices

namespace {

void require_shape(const Flavor& f, const Gf2Matrix& a, const char* who) {
  if (a.rows() != f.generator_count() || a.cols() != f.generator_count())
    throw std::invalid_argument(std::string(who) + ": matrix size does not match the generators");
}

}  // namespace

CheckResult is_independent(const Flavor& f, const Gf2Matrix& a) {
  require_shape(f, a, "is_independent");
  CheckResult r;
  for (const auto& [p, q] : f.disjoint_pairs)
    if (a.get(p, q) || a.get(q, p)) r.violations.push_back({p, q});
  r.ok = r.violations.empty();
  return r;
}

CheckResult is_additive(const Flavor& f, const Gf2Matrix& a) {
  require_shape(f, a, "is_additive");
  CheckResult r;
  for (std::size_t i = 0; i < f.relations.size(); ++i) {
    Gf2Vector sum(a.cols());
    for (auto g : f.relations[i]) sum ^= a.row(g);
    for (auto q : sum.support()) r.violations.push_back({i, q});
  }
  r.ok = r.violations.empty();
  return r;
}

bool s_sum(const Flavor& f, const Gf2Matrix& a, std::size_t x, std::size_t e) {
  require_shape(f, a, "s_sum");
  if (x >= f.subobjects.size() || e >= f.subobjects[x].witnesses.size())
    throw std::invalid_argument("s_sum: witness outside the subobject");
  bool s = false;
  for (const auto& [p, q] : f.subobjects[x].witnesses[e]) s ^= a.get(p, q);
  return s;
}

CheckResult is_nontrivial(const Flavor& f, const Gf2Matrix& a, NontrivialMode mode) {
  require_shape(f, a, "is_nontrivial");
  CheckResult r;
  for (std::size_t x = 0; x < f.subobjects.size(); ++x) {
    const std::size_t count = mode == NontrivialMode::All ? f.subobjects[x].witnesses.size() : 1;
    for (std::size_t e = 0; e < count; ++e)
      if (!s_sum(f, a, x, e)) r.violations.push_back({x, e});
  }
  r.ok = r.violations.empty();
  return r;
}

Gf2Matrix bform_expand(const Flavor& f, const Gf2Matrix& b) {
  if (b.rows() != f.basis_size || b.cols() != f.basis_size || !b.is_symmetric())
    throw std::invalid_argument("bform_expand: expected a symmetric matrix on the basis");
  const auto e = Gf2Matrix::from_columns(f.generators, f.basis_size);
  return e.transpose() * b * e;
}

Gf2Matrix oct_compress(const Flavor& f, const Gf2Matrix& a) {
  if (!is_additive(f, a).ok) throw std::invalid_argument("oct_compress: matrix is not additive");
  return a.submatrix(f.basis_generators, f.basis_generators);
}

// ---------------------------------------------------------------- graph criterion

GraphCriterionReport graph_criterion_check(const Graph& g, const Gf2Matrix& y, const Gf2Matrix& omega,
                                           const GraphFlavorLimits& limits) {
  const Flavor f = graph_flavor(g, limits);
  if (y.cols() != f.basis_size) throw std::invalid_argument("graph_criterion_check: y must have one column per basis cycle");
  if (omega.rows() != y.rows() || omega.cols() != y.rows() || !omega.is_symmetric())
    throw std::invalid_argument("graph_criterion_check: omega must be symmetric of size beta");
  const Gf2Matrix b = y.transpose() * omega * y;
  GraphCriterionReport rep;
  rep.inconclusive = f.truncated;
  for (const auto& [p, q] : f.disjoint_pairs)
    if (pairing(b, f.generators[p], f.generators[q])) {
      rep.independence = false;
      rep.violations.push_back({0, p, q});
    }
  for (std::size_t x = 0; x < f.subobjects.size(); ++x) {
    const bool k5 = f.subobjects[x].label.rfind("K5", 0) == 0;
    for (std::size_t e = 0; e < f.subobjects[x].witnesses.size(); ++e) {
      bool s = false;
      for (const auto& [p, q] : f.subobjects[x].witnesses[e]) s ^= pairing(b, f.generators[p], f.generators[q]);
      if (s) continue;
      (k5 ? rep.k5_nontriviality : rep.k33_nontriviality) = false;
      rep.violations.push_back({k5 ? std::size_t{1} : std::size_t{2}, x, e});
    }
  }
  return rep;
}

}  // namespace z2e
