#include "z2e/delprod.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace z2e {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

DeletedProduct::DeletedProduct(TopComplex complex) : complex_(std::move(complex)) {
  const std::size_t f = complex_.face_count();
  lookup_.assign(f * f, kNone);
  for (std::size_t s = 0; s < f; ++s)
    for (std::size_t t = 0; t < f; ++t)
      if (complex_.disjoint(s, t)) {
        lookup_[s * f + t] = cells_.size();
        cells_.emplace_back(s, t);
      }
  swap_.resize(cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const auto [s, t] = cells_[c];
    swap_[c] = lookup_[t * f + s];
    if (s < t) unordered_.push_back(c);
  }
}

std::optional<std::size_t> DeletedProduct::cell_index(std::size_t sigma, std::size_t tau) const {
  const std::size_t f = complex_.face_count();
  if (sigma >= f || tau >= f) return std::nullopt;
  const std::size_t c = lookup_[sigma * f + tau];
  if (c == kNone) return std::nullopt;
  return c;
}

Gf2Vector DeletedProduct::swapped(const Gf2Vector& chain) const {
  Gf2Vector out(cells_.size());
  for (auto c : chain.support()) out.set(swap_[c]);
  return out;
}

bool is_cycle(const DeletedProduct& dp, const Gf2Vector& chain) {
  if (chain.size() != dp.cell_count()) throw std::invalid_argument("is_cycle: chain has wrong length");
  const auto& k = dp.complex();
  const std::size_t f = k.face_count(), s = k.subface_count;
  // side 0: (a, β) with a a facet of α; side 1: (α, b)
  std::vector<std::uint8_t> parity(2 * s * f, 0);
  for (auto c : chain.support()) {
    const auto [alpha, beta] = dp.cell(c);
    for (auto a : k.boundary[alpha]) parity[a * f + beta] ^= 1;
    for (auto b : k.boundary[beta]) parity[s * f + alpha * s + b] ^= 1;
  }
  return std::all_of(parity.begin(), parity.end(), [](std::uint8_t p) { return p == 0; });
}

bool is_symmetric_cycle(const DeletedProduct& dp, const Gf2Vector& chain) {
  return dp.swapped(chain) == chain && is_cycle(dp, chain);
}

CycleSpace cycle_space(const DeletedProduct& dp) {
  const auto& k = dp.complex();
  const std::size_t f = k.face_count(), s = k.subface_count;

  // cycles in the first factor with the second face fixed
  std::vector<std::vector<std::size_t>> by_second(f);
  for (std::size_t c = 0; c < dp.cell_count(); ++c) by_second[dp.cell(c).second].push_back(c);
  std::vector<Gf2Vector> partial;
  for (std::size_t beta = 0; beta < f; ++beta) {
    const auto& cols = by_second[beta];
    if (cols.empty()) continue;
    Gf2Matrix local(std::max<std::size_t>(s, 1), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (auto a : k.boundary[dp.cell(cols[i]).first]) local.flip(a, i);
    for (const auto& v : kernel_basis(local)) {
      Gf2Vector g(dp.cell_count());
      for (auto i : v.support()) g.set(cols[i]);
      partial.push_back(std::move(g));
    }
  }

  // the boundary in the second factor on their span
  Gf2Matrix second(std::max<std::size_t>(f * s, 1), partial.size());
  for (std::size_t i = 0; i < partial.size(); ++i)
    for (auto c : partial[i].support()) {
      const auto [alpha, beta] = dp.cell(c);
      for (auto b : k.boundary[beta]) second.flip(alpha * s + b, i);
    }
  CycleSpace out;
  for (const auto& comb : kernel_basis(second)) {
    Gf2Vector z(dp.cell_count());
    for (auto i : comb.support()) z ^= partial[i];
    out.basis.push_back(std::move(z));
  }

  // swap-invariant part: kernel of I + s on the cycle space
  Gf2Matrix sym(std::max<std::size_t>(dp.cell_count(), 1), out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    const Gf2Vector d = out.basis[i] ^ dp.swapped(out.basis[i]);
    for (auto c : d.support()) sym.set(c, i);
  }
  for (const auto& comb : kernel_basis(sym)) {
    Gf2Vector z(dp.cell_count());
    for (auto i : comb.support()) z ^= out.basis[i];
    out.symmetric_basis.push_back(std::move(z));
  }
  return out;
}

CycleDims cycle_space_dims(const DeletedProduct& dp) {
  const auto cs = cycle_space(dp);
  return {cs.basis.size(), cs.symmetric_basis.size()};
}

CycleDims cycle_space_dims(const JoinComplex& j) { return cycle_space_dims(DeletedProduct(top_complex(j))); }

Gf2Vector symmetrized_torus(const DeletedProduct& dp, const Gf2Vector& p, const Gf2Vector& q) {
  Gf2Vector out = dp.empty_chain();
  for (auto s : p.support())
    for (auto t : q.support()) {
      const auto c = dp.cell_index(s, t);
      if (!c) throw std::invalid_argument("symmetrized_torus: the chains are not vertex-disjoint");
      out.flip(*c);
      out.flip(dp.swap(*c));
    }
  return out;
}

Gf2Vector symmetrized_torus(const JoinComplex& j, const DeletedProduct& dp, const Octahedron& p, const Octahedron& q) {
  if (!vertex_disjoint(p, q)) throw std::invalid_argument("symmetrized_torus: octahedra are not vertex-disjoint");
  return symmetrized_torus(dp, j.chain(p), j.chain(q));
}

Gf2Vector triple_deleted_product(const JoinComplex& j, const DeletedProduct& dp, const TripleSubcomplex& x) {
  const auto faces = j.top_faces(x);
  Gf2Vector out = dp.empty_chain();
  for (auto s : faces)
    for (auto t : faces)
      if (const auto c = dp.cell_index(s, t)) out.set(*c);
  return out;
}

TripleSubcomplex standard_triple(const JoinComplex& j) {
  TripleSubcomplex x;
  x.triples.assign(j.sizes().size(), {0, 1, 2});
  return x;
}

// ---------------------------------------------------------------- tensor coordinates

namespace {

Gf2Vector edge_swap(const DeletedGraph& d, const Gf2Vector& c) {
  Gf2Vector out(c.size());
  for (auto e : c.support()) out.set(d.edge_swap[e]);
  return out;
}

Gf2Vector k3_cycle(const DeletedGraph& d) {
  Gf2Vector c(d.graph.edge_count());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) c.set(d.edge_of(a, b));
  return c;
}

Gf2Vector kron_vectors(const std::vector<Gf2Vector>& parts) {
  std::size_t n = 1;
  for (const auto& p : parts) n *= p.size();
  Gf2Vector out(n);
  std::vector<std::size_t> idx(parts.size(), 0);
  for (std::size_t flat = 0; flat < n; ++flat) {
    bool on = true;
    for (std::size_t i = 0; i < parts.size() && on; ++i) on = parts[i].get(idx[i]);
    if (on) out.set(flat);
    for (std::size_t i = parts.size(); i-- > 0;) {
      if (++idx[i] < parts[i].size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

}  // namespace

TensorIso::TensorIso(const JoinComplex& j, const DeletedProduct& dp) : join_(j), dp_(dp) {
  if (dp.cell_count() == 0 || dp.complex().face_count() != j.top_face_count())
    throw std::invalid_argument("TensorIso: deleted product does not belong to the join");
  for (int n : j.sizes()) {
    factors_.push_back(deleted_graph(n));
    const auto& d = factors_.back();
    bases_.push_back(h1_basis_tilde(d));
    const auto& basis = bases_.back();
    std::vector<std::size_t> reps;
    for (const auto& b : basis) reps.push_back(n == 3 ? 0 : b.edge);
    rep_edges_.push_back(reps);
    Gf2Matrix t(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto img = tilde_coordinates(d, basis, edge_swap(d, basis[c].cycle));
      for (auto r : img.support()) t.set(r, c);
    }
    t_.push_back(std::move(t));
    dim_ *= basis.size();
  }
  big_t_ = t_[0];
  for (std::size_t i = 1; i < t_.size(); ++i) big_t_ = kron(big_t_, t_[i]);
}

std::vector<std::size_t> TensorIso::split_index(std::size_t idx) const {
  std::vector<std::size_t> out(bases_.size());
  for (std::size_t i = bases_.size(); i-- > 0;) {
    out[i] = idx % bases_[i].size();
    idx /= bases_[i].size();
  }
  return out;
}

Gf2Vector TensorIso::to_tensor(const Gf2Vector& cycle) const {
  if (!is_cycle(dp_, cycle)) throw std::invalid_argument("to_tensor: input is not a cycle");
  Gf2Vector out(dim_);
  const std::size_t l = bases_.size();
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    const auto multi = split_index(idx);
    Tuple alpha(l), beta(l);
    for (std::size_t i = 0; i < l; ++i) {
      const auto [u, v] = factors_[i].graph.edge(rep_edges_[i][multi[i]]);
      alpha[i] = u;
      beta[i] = v - factors_[i].n;
    }
    const auto c = dp_.cell_index(join_.top_index(alpha), join_.top_index(beta));
    if (cycle.get(*c)) out.set(idx);
  }
  return out;
}

Gf2Vector TensorIso::product_cells(const std::vector<Gf2Vector>& factor_edges) const {
  const std::size_t l = factor_edges.size();
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& e : factor_edges) edges.push_back(e.support());
  Gf2Vector out = dp_.empty_chain();
  if (std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.empty(); })) return out;
  std::vector<std::size_t> pick(l, 0);
  Tuple alpha(l), beta(l);
  while (true) {
    for (std::size_t i = 0; i < l; ++i) {
      const auto [u, v] = factors_[i].graph.edge(edges[i][pick[i]]);
      alpha[i] = u;
      beta[i] = v - factors_[i].n;
    }
    out.flip(*dp_.cell_index(join_.top_index(alpha), join_.top_index(beta)));
    std::size_t i = l;
    while (i > 0 && ++pick[i - 1] == edges[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

Gf2Vector TensorIso::from_tensor(const Gf2Vector& coords) const {
  if (coords.size() != dim_) throw std::invalid_argument("from_tensor: wrong dimension");
  Gf2Vector out = dp_.empty_chain();
  for (auto idx : coords.support()) {
    const auto multi = split_index(idx);
    std::vector<Gf2Vector> parts;
    for (std::size_t i = 0; i < multi.size(); ++i) parts.push_back(bases_[i][multi[i]].cycle);
    out ^= product_cells(parts);
  }
  return out;
}

Gf2Vector TensorIso::k3_tensor() const {
  std::vector<Gf2Vector> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    parts.push_back(tilde_coordinates(factors_[i], bases_[i], k3_cycle(factors_[i])));
  return kron_vectors(parts);
}

KerImReport ker_im_check(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("ker_im_check: no factors");
  Gf2Matrix big_t;
  std::vector<Gf2Vector> k3_parts;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 3) throw std::invalid_argument("ker_im_check: sizes must be at least 3");
    const auto d = deleted_graph(sizes[i]);
    const auto fc = fundamental_cycles(d.graph);
    Gf2Matrix t(fc.size(), fc.size());
    for (std::size_t c = 0; c < fc.size(); ++c) {
      const auto img = fundamental_coordinates(fc, edge_swap(d, fc[c].cycle));
      for (auto r : img.support()) t.set(r, c);
    }
    big_t = i == 0 ? t : kron(big_t, t);
    k3_parts.push_back(fundamental_coordinates(fc, k3_cycle(d)));
  }
  KerImReport r;
  r.dim = big_t.rows();
  const Gf2Matrix a = big_t ^ Gf2Matrix::identity(r.dim);
  r.im = rank(a);
  r.ker = r.dim - r.im;
  r.k3_in_image = solve_affine(a, kron_vectors(k3_parts)).has_value();
  return r;
}

// ---------------------------------------------------------------- generators

Gf2Vector generator_sum(const JoinComplex& j, const DeletedProduct& dp, const GeneratorDecomposition& g) {
  Gf2Vector out = dp.empty_chain();
  for (const auto& t : g.tori) out ^= symmetrized_torus(j, dp, t.p, t.q);
  for (const auto& x : g.triples) out ^= triple_deleted_product(j, dp, x);
  for (const auto& m : g.mixed) out ^= mixed_torus(j, dp, m);
  return out;
}

Gf2Vector mixed_torus(const JoinComplex& j, const DeletedProduct& dp, const MixedTorus& m) {
  const auto& sizes = j.sizes();
  std::vector<std::size_t> large;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] > 3) large.push_back(i);
  if (m.p.pairs.size() != large.size() || m.q.pairs.size() != large.size())
    throw std::invalid_argument("mixed_torus: one pair per coordinate of size > 3 expected");
  if (!vertex_disjoint(m.p, m.q)) throw std::invalid_argument("mixed_torus: pairs must be disjoint");
  const auto in = [](const std::array<int, 2>& pr, int a) { return pr[0] == a || pr[1] == a; };
  Gf2Vector out = dp.empty_chain();
  for (std::size_t c = 0; c < dp.cell_count(); ++c) {
    const auto a = j.top_face(dp.cell(c).first);
    const auto b = j.top_face(dp.cell(c).second);
    bool pq = true, qp = true;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if (sizes[i] == 3 && a[i] > 2) pq = qp = false;
    for (std::size_t l = 0; l < large.size(); ++l) {
      const int x = a[large[l]], y = b[large[l]];
      pq = pq && in(m.p.pairs[l], x) && in(m.q.pairs[l], y);
      qp = qp && in(m.q.pairs[l], x) && in(m.p.pairs[l], y);
    }
    if (pq || qp) out.set(c);
  }
  return out;
}

namespace {

// the 4-cycle x y' z w' of K̃_n as the pair ({x,z},{y,w})
std::pair<std::array<int, 2>, std::array<int, 2>> four_cycle_sides(const DeletedGraph& d, const Gf2Vector& q) {
  std::set<int> lo, hi;
  for (auto e : q.support()) {
    lo.insert(d.graph.edge(e).first);
    hi.insert(d.graph.edge(e).second - d.n);
  }
  if (lo.size() != 2 || hi.size() != 2) throw ConsistencyError("four_cycle_sides: not a 4-cycle");
  return {{*lo.begin(), *lo.rbegin()}, {*hi.begin(), *hi.rbegin()}};
}

}  // namespace

GeneratorDecomposition generator_decomposition(const JoinComplex& j, const DeletedProduct& dp, const Gf2Vector& c) {
  if (!is_symmetric_cycle(dp, c)) throw std::invalid_argument("generator_decomposition: not a symmetric cycle");
  const TensorIso iso(j, dp);
  const Gf2Vector x = iso.to_tensor(c);
  const auto& sizes = j.sizes();
  GeneratorDecomposition out;

  const bool all_three = std::all_of(sizes.begin(), sizes.end(), [](int n) { return n == 3; });
  const bool has_three = std::any_of(sizes.begin(), sizes.end(), [](int n) { return n == 3; });

  if (all_three) {
    if (!x.is_zero()) out.triples.push_back(standard_triple(j));
  } else {
    const Gf2Matrix a = iso.swap_matrix() ^ Gf2Matrix::identity(iso.dim());
    auto sol = solve_affine(a, x);
    if (!sol) {
      sol = solve_affine(a, x ^ iso.k3_tensor());
      if (!sol) throw ConsistencyError("generator_decomposition: cycle outside Im(I+T) + <K3 tensor>");
      out.triples.push_back(standard_triple(j));
    }
    // a + T a for a product of basis cycles, expanded through 4-cycles in
    // the coordinates of size > 3 (size-3 coordinates keep all of K̃_3)
    std::set<TorusGenerator> tori;
    for (auto idx : sol->particular.support()) {
      const auto multi = iso.split_index(idx);
      std::vector<std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>>> sides;
      for (std::size_t i = 0; i < multi.size(); ++i) {
        if (sizes[i] == 3) continue;
        const auto& d = iso.factors()[i];
        std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>> s;
        for (const auto& q : four_cycle_decomposition(d, iso.bases()[i][multi[i]].cycle))
          s.push_back(four_cycle_sides(d, q));
        sides.push_back(std::move(s));
      }
      std::vector<std::size_t> pick(sides.size(), 0);
      while (true) {
        TorusGenerator t;
        for (std::size_t i = 0; i < sides.size(); ++i) {
          t.p.pairs.push_back(sides[i][pick[i]].first);
          t.q.pairs.push_back(sides[i][pick[i]].second);
        }
        if (t.q < t.p) std::swap(t.p, t.q);
        if (!tori.erase(t)) tori.insert(t);
        std::size_t i = sides.size();
        while (i > 0 && ++pick[i - 1] == sides[i - 1].size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
    if (has_three) {
      for (const auto& t : tori) out.mixed.push_back({t.p, t.q});
    } else {
      out.tori.assign(tori.begin(), tori.end());
    }
  }

  if (generator_sum(j, dp, out) != c) throw ConsistencyError("generator_decomposition: reconstruction failed");
  return out;
}

// ---------------------------------------------------------------- graphs

Gf2Vector economic_deleted_product(const Graph& g, const DeletedProduct& dp, const Gf2Vector& subgraph) {
  const Graph sub = g.subgraph(subgraph);
  const auto type = homeomorphism_type(sub);
  if (type != HomeoType::K5 && type != HomeoType::K33)
    throw std::invalid_argument("economic_deleted_product: subgraph is not a K5 or K33 subdivision");
  const auto bs = branch_structure(sub);
  const auto edges = subgraph.support();  // sub edge i is g edge edges[i]
  Gf2Vector out = dp.empty_chain();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = 0; b < edges.size(); ++b) {
      const auto [p, q] = bs.endpoints[bs.edge_branch[a]];
      const auto [r, s] = bs.endpoints[bs.edge_branch[b]];
      if (p == r || p == s || q == r || q == s) continue;
      const auto c = dp.cell_index(edges[a], edges[b]);
      if (!c) throw ConsistencyError("economic_deleted_product: disjoint branches share a vertex");
      out.set(*c);
    }
  return out;
}

Gf2Vector graph_generator_cycle(const Graph& g, const DeletedProduct& dp, const GraphGenerator& gen) {
  if (const auto* t = std::get_if<SymTorus>(&gen)) return symmetrized_torus(dp, t->p, t->q);
  return economic_deleted_product(g, dp, std::get<EconomicDP>(gen).subgraph);
}

std::vector<Gf2Vector> symmetric_cycles_within(const DeletedProduct& dp, const Gf2Vector& support) {
  const auto& k = dp.complex();
  std::vector<std::size_t> vars;
  for (auto c : dp.unordered())
    if (support.get(c) && support.get(dp.swap(c))) vars.push_back(c);
  // side-0 conditions (a, β); the other side follows by symmetry
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  std::vector<std::vector<std::size_t>> rows_per_var(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (auto c : {vars[i], dp.swap(vars[i])}) {
      const auto [alpha, beta] = dp.cell(c);
      for (auto a : k.boundary[alpha]) {
        auto [it, fresh] = row_of.try_emplace({a, beta}, row_of.size());
        rows_per_var[i].push_back(it->second);
      }
    }
  }
  Gf2Matrix m(std::max<std::size_t>(row_of.size(), 1), vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (auto r : rows_per_var[i]) m.flip(r, i);
  std::vector<Gf2Vector> out;
  for (const auto& comb : kernel_basis(m)) {
    Gf2Vector z = dp.empty_chain();
    for (auto i : comb.support()) {
      z.set(vars[i]);
      z.set(dp.swap(vars[i]));
    }
    out.push_back(std::move(z));
  }
  return out;
}

namespace {

std::variant<std::monostate, SymTorus, EconomicDP> classify_minimal(const Graph& g, const DeletedProduct& dp, const Gf2Vector& c) {
  Gf2Vector mask(g.edge_count());
  for (auto cell : c.support()) {
    mask.set(dp.cell(cell).first);
    mask.set(dp.cell(cell).second);
  }
  const Graph sub = g.subgraph(mask);
  const auto type = homeomorphism_type(sub);
  if (type == HomeoType::DisjointCyclePair) {
    // split the support into its two cycles
    const auto edges = mask.support();
    Gf2Vector p(g.edge_count());
    std::set<int> reach{g.edge(edges[0]).first};
    bool grown = true;
    while (grown) {
      grown = false;
      for (auto e : edges) {
        const auto [u, v] = g.edge(e);
        if (reach.count(u) != reach.count(v)) {
          reach.insert(u);
          reach.insert(v);
          grown = true;
        }
      }
    }
    for (auto e : edges)
      if (reach.count(g.edge(e).first)) p.set(e);
    SymTorus t{p, mask ^ p};
    if (symmetrized_torus(dp, t.p, t.q) != c) throw ConsistencyError("graph decomposition: piece is not the torus of its support");
    return t;
  }
  if (type == HomeoType::K5 || type == HomeoType::K33) {
    EconomicDP e{type, mask};
    if (economic_deleted_product(g, dp, mask) != c)
      throw ConsistencyError("graph decomposition: piece is not the economic deleted product of its support");
    return e;
  }
  return std::monostate{};
}

// A piece with no proper symmetric subcycle need not be a single generator
// (two disjoint theta graphs already give one). Such a piece is written over
// all tori and economic deleted products inside its support.
void span_pieces(const Graph& g, const DeletedProduct& dp, const Gf2Vector& c, std::vector<GraphGenerator>& out) {
  Gf2Vector mask(g.edge_count());
  for (auto cell : c.support()) {
    mask.set(dp.cell(cell).first);
    mask.set(dp.cell(cell).second);
  }
  Gf2Vector region = dp.empty_chain();
  for (std::size_t cell = 0; cell < dp.cell_count(); ++cell)
    if (mask.get(dp.cell(cell).first) && mask.get(dp.cell(cell).second)) region.set(cell);
  const std::size_t target = symmetric_cycles_within(dp, region).size();

  SpanBuilder span(dp.cell_count());
  std::vector<GraphGenerator> accepted;
  const auto offer = [&](GraphGenerator gen) {
    if (span.add(graph_generator_cycle(g, dp, gen))) accepted.push_back(std::move(gen));
    return span.rank() >= target;
  };
  bool full = false;
  const auto cycles = simple_cycles(g, mask, 100'000).cycles;
  std::vector<std::set<int>> verts;
  for (const auto& cyc : cycles) {
    std::set<int> vs;
    for (auto e : cyc.support()) {
      vs.insert(g.edge(e).first);
      vs.insert(g.edge(e).second);
    }
    verts.push_back(std::move(vs));
  }
  for (std::size_t a = 0; a < cycles.size() && !full; ++a)
    for (std::size_t b = a + 1; b < cycles.size() && !full; ++b) {
      if (std::any_of(verts[a].begin(), verts[a].end(), [&](int v) { return verts[b].count(v) > 0; })) continue;
      full = offer(SymTorus{cycles[a], cycles[b]});
    }
  if (!full) {
    const auto kur = kuratowski_subgraphs(g.subgraph(mask));
    for (const auto& k : kur.subgraphs) {
      if (full) break;
      const auto host = mask.support();  // sub edge i is g edge host[i]
      Gf2Vector edges(g.edge_count());
      for (auto e : k.edges.support()) edges.set(host[e]);
      full = offer(EconomicDP{k.type, edges});
    }
  }
  const auto coeffs = span.express(c);
  if (!coeffs) throw ConsistencyError("graph decomposition: piece outside the span of tori and economic deleted products");
  for (auto i : coeffs->support()) out.push_back(accepted[i]);
}

void peel(const Graph& g, const DeletedProduct& dp, const Gf2Vector& c, std::vector<GraphGenerator>& out) {
  if (c.is_zero()) return;
  const auto inside = symmetric_cycles_within(dp, c);
  for (const auto& z : inside) {
    if (z == c) continue;
    peel(g, dp, z, out);
    peel(g, dp, z ^ c, out);
    return;
  }
  const auto piece = classify_minimal(g, dp, c);
  if (const auto* t = std::get_if<SymTorus>(&piece))
    out.push_back(*t);
  else if (const auto* e = std::get_if<EconomicDP>(&piece))
    out.push_back(*e);
  else
    span_pieces(g, dp, c, out);
}

}  // namespace

std::vector<GraphGenerator> graph_symmetric_decomposition(const Graph& g, const DeletedProduct& dp, const Gf2Vector& c) {
  if (dp.complex().dim != 1 || dp.complex().face_count() != g.edge_count())
    throw std::invalid_argument("graph_symmetric_decomposition: deleted product does not belong to the graph");
  if (!is_symmetric_cycle(dp, c)) throw std::invalid_argument("graph_symmetric_decomposition: not a symmetric 2-cycle");
  std::vector<GraphGenerator> out;
  peel(g, dp, c, out);
  Gf2Vector sum = dp.empty_chain();
  for (const auto& gen : out) sum ^= graph_generator_cycle(g, dp, gen);
  if (sum != c) throw ConsistencyError("graph decomposition: pieces do not sum to the input");
  return out;
}

}  // namespace z2e
