#include "z2e/chains.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace z2e {

Gf2Matrix boundary_matrix(const JoinComplex& j, int dim) {
  if (dim < 1 || dim > j.dim()) throw std::invalid_argument("boundary_matrix: dimension out of range");
  const auto top = j.faces(dim);
  const auto sub = j.faces(dim - 1);
  Gf2Matrix m(sub.size(), top.size());
  for (std::size_t c = 0; c < top.size(); ++c) {
    for (std::size_t i = 0; i < top[c].size(); ++i) {
      if (top[c][i] == kBlank) continue;
      Tuple b = top[c];
      b[i] = kBlank;
      const auto it = std::lower_bound(sub.begin(), sub.end(), b);
      m.flip(static_cast<std::size_t>(it - sub.begin()), c);
    }
  }
  return m;
}

bool is_cycle(const JoinComplex& j, int dim, const Gf2Vector& chain) {
  const auto m = boundary_matrix(j, dim);
  if (chain.size() != m.cols()) throw std::invalid_argument("is_cycle: chain has wrong length");
  return (m * chain).is_zero();
}

std::vector<Tuple> rook_points(const JoinComplex& j, const Gf2Vector& chain) {
  std::vector<Tuple> out;
  for (auto f : chain.support()) out.push_back(j.top_face(f));
  return out;
}

Gf2Vector chain_from_points(const JoinComplex& j, const std::vector<Tuple>& points) {
  Gf2Vector v(j.top_face_count());
  for (const auto& p : points) v.flip(j.top_index(p));
  return v;
}

bool is_rook_cycle(const JoinComplex& j, const Gf2Vector& points) {
  // a coordinate line fixes all coordinates but one; count parity per line
  const auto& sizes = j.sizes();
  for (std::size_t axis = 0; axis < sizes.size(); ++axis) {
    std::map<Tuple, int> parity;
    for (auto f : points.support()) {
      Tuple t = j.top_face(f);
      t[axis] = kBlank;
      parity[t] ^= 1;
    }
    for (const auto& [line, p] : parity)
      if (p) return false;
  }
  return true;
}

Octahedron parallelepiped(const JoinComplex& j, const Tuple& a) {
  Octahedron p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int last = j.sizes()[i] - 1;
    if (a[i] < 0 || a[i] >= last) throw std::invalid_argument("parallelepiped: point outside the smaller grid");
    p.pairs.push_back({a[i], last});
  }
  return p;
}

std::vector<Octahedron> rook_decomposition(const JoinComplex& j, const Gf2Vector& rook_cycle) {
  if (!is_rook_cycle(j, rook_cycle)) throw std::invalid_argument("rook_decomposition: input is not a rook cycle");
  std::vector<Octahedron> out;
  for (const auto& a : rook_points(j, rook_cycle)) {
    bool inner = true;
    for (std::size_t i = 0; i < a.size(); ++i) inner = inner && a[i] < j.sizes()[i] - 1;
    if (inner) out.push_back(parallelepiped(j, a));
  }
  return out;
}

std::vector<Octahedron> cycle_space_basis(const JoinComplex& j) {
  std::vector<int> smaller;
  for (int n : j.sizes()) smaller.push_back(n - 1);
  std::vector<Octahedron> out;
  const std::size_t d = smaller.size();
  Tuple a(d, 0);
  while (true) {
    out.push_back(parallelepiped(j, a));
    std::size_t i = d;
    while (i > 0 && ++a[i - 1] == smaller[i - 1]) a[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::size_t cycle_space_dim(const JoinComplex& j) {
  std::size_t d = 1;
  for (int n : j.sizes()) d *= static_cast<std::size_t>(n - 1);
  return d;
}

Gf2Vector basis_coordinates(const JoinComplex& j, const Gf2Vector& cycle) {
  Gf2Vector coords(cycle_space_dim(j));
  for (auto f : cycle.support()) {
    const Tuple a = j.top_face(f);
    std::size_t idx = 0;
    bool inner = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int m = j.sizes()[i] - 1;
      inner = inner && a[i] < m;
      idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(a[i]);
    }
    if (inner) coords.flip(idx);
  }
  return coords;
}

// ---------------------------------------------------------------- k = 1 relations

namespace {

Octahedron quad(int a, int b, int u, int v) {
  return Octahedron{{{std::min(a, b), std::max(a, b)}, {std::min(u, v), std::max(u, v)}}};
}

}  // namespace

std::vector<Octahedron> relation_cycles(const AlphaRelation& r) {
  return {quad(r.a, r.b, r.u, r.v), quad(r.a, r.b, r.v, r.w), quad(r.a, r.b, r.w, r.u)};
}

std::vector<Octahedron> relation_cycles(const BetaRelation& r) {
  return {quad(r.a, r.b, r.u, r.v), quad(r.b, r.c, r.u, r.v), quad(r.c, r.a, r.u, r.v)};
}

RelationExpression relation_reduction_k1(const JoinComplex& j, const std::vector<Octahedron>& relation) {
  if (j.dim() != 1) throw std::invalid_argument("relation_reduction_k1: needs a 1-dimensional join");
  Gf2Vector total(j.top_face_count());
  Gf2Vector formal(j.octahedron_count());
  for (const auto& o : relation) {
    total ^= j.chain(o);
    formal.flip(j.octahedron_index(o));
  }
  if (!total.is_zero()) throw std::invalid_argument("relation_reduction_k1: the 4-cycles do not sum to zero");

  std::set<AlphaRelation> alphas;
  std::set<BetaRelation> betas;
  std::map<Octahedron, int> rest;
  auto toggle = [](auto& set, const auto& item) {
    if (!set.erase(item)) set.insert(item);
  };
  // rewrite toward the 4-cycles {0,a}x{0,v}, which are independent
  auto push = [&](const Octahedron& o, auto& self) -> void {
    const int a = o.pairs[0][0], b = o.pairs[0][1], u = o.pairs[1][0], v = o.pairs[1][1];
    if (u != 0) {
      toggle(alphas, AlphaRelation{a, b, 0, u, v});
      self(quad(a, b, 0, u), self);
      self(quad(a, b, 0, v), self);
    } else if (a != 0) {
      toggle(betas, BetaRelation{0, a, b, 0, v});
      self(quad(0, a, 0, v), self);
      self(quad(0, b, 0, v), self);
    } else {
      rest[o] ^= 1;
    }
  };
  for (const auto& o : relation) push(o, push);
  for (const auto& [o, p] : rest)
    if (p) throw std::logic_error("relation_reduction_k1: basis terms did not cancel");

  RelationExpression out{{alphas.begin(), alphas.end()}, {betas.begin(), betas.end()}};
  Gf2Vector check(j.octahedron_count());
  for (const auto& r : out.alphas)
    for (const auto& o : relation_cycles(r)) check.flip(j.octahedron_index(o));
  for (const auto& r : out.betas)
    for (const auto& o : relation_cycles(r)) check.flip(j.octahedron_index(o));
  if (check != formal) throw std::logic_error("relation_reduction_k1: reduction does not reproduce the input");
  return out;
}

// ---------------------------------------------------------------- graph cycles

bool is_graph_cycle(const Graph& g, const Gf2Vector& edges) {
  if (edges.size() != g.edge_count()) throw std::invalid_argument("is_graph_cycle: chain has wrong length");
  std::vector<int> deg(g.vertex_count(), 0);
  for (auto e : edges.support()) {
    deg[static_cast<std::size_t>(g.edge(e).first)] ^= 1;
    deg[static_cast<std::size_t>(g.edge(e).second)] ^= 1;
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

std::vector<FundamentalCycle> fundamental_cycles(const Graph& g) {
  const std::size_t nv = g.vertex_count(), ne = g.edge_count();
  std::vector<bool> seen(nv, false), tree(ne, false);
  std::vector<Gf2Vector> to_root(nv, Gf2Vector(ne));
  for (std::size_t s = 0; s < nv; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (auto e : g.incidence()[static_cast<std::size_t>(v)]) {
        const int w = g.other_end(e, v);
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        tree[e] = true;
        to_root[static_cast<std::size_t>(w)] = to_root[static_cast<std::size_t>(v)];
        to_root[static_cast<std::size_t>(w)].set(e);
        q.push(w);
      }
    }
  }
  std::vector<FundamentalCycle> out;
  for (std::size_t e = 0; e < ne; ++e) {
    if (tree[e]) continue;
    const auto [u, v] = g.edge(e);
    Gf2Vector c = to_root[static_cast<std::size_t>(u)] ^ to_root[static_cast<std::size_t>(v)];
    c.set(e);
    out.push_back({e, std::move(c)});
  }
  return out;
}

Gf2Vector fundamental_coordinates(const std::vector<FundamentalCycle>& basis, const Gf2Vector& cycle) {
  Gf2Vector coords(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) coords.set(i, cycle.get(basis[i].edge));
  return coords;
}

std::vector<int> cycle_vertices(const Graph& g, const Gf2Vector& simple_cycle) {
  std::map<int, std::vector<int>> nbr;
  for (auto e : simple_cycle.support()) {
    const auto [u, v] = g.edge(e);
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  if (nbr.empty()) return {};
  for (const auto& [v, ns] : nbr)
    if (ns.size() != 2) throw std::invalid_argument("cycle_vertices: not a simple cycle");
  std::vector<int> out{nbr.begin()->first};
  int prev = out[0], cur = std::min(nbr.begin()->second[0], nbr.begin()->second[1]);
  while (cur != out[0]) {
    out.push_back(cur);
    const auto& ns = nbr[cur];
    const int nxt = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = nxt;
  }
  if (out.size() != nbr.size()) throw std::invalid_argument("cycle_vertices: not a simple cycle");
  return out;
}

std::vector<Gf2Vector> simple_cycle_split(const Graph& g, const Gf2Vector& c) {
  if (!is_graph_cycle(g, c)) throw std::invalid_argument("simple_cycle_split: input is not a cycle");
  Gf2Vector rest = c;
  std::vector<Gf2Vector> out;
  while (!rest.is_zero()) {
    const int start = g.edge(rest.first()).first;
    std::vector<int> path{start};
    std::vector<std::size_t> path_edges;
    std::map<int, std::size_t> pos{{start, 0}};
    Gf2Vector used(g.edge_count());
    int cur = start;
    while (true) {
      std::size_t pick = g.edge_count();
      for (auto e : g.incidence()[static_cast<std::size_t>(cur)])
        if (rest.get(e) && !used.get(e) && e < pick) pick = e;
      used.set(pick);
      path_edges.push_back(pick);
      cur = g.other_end(pick, cur);
      if (auto it = pos.find(cur); it != pos.end()) {
        Gf2Vector cyc(g.edge_count());
        for (std::size_t i = it->second; i < path_edges.size(); ++i) cyc.set(path_edges[i]);
        rest ^= cyc;
        out.push_back(std::move(cyc));
        break;
      }
      pos[cur] = path.size();
      path.push_back(cur);
    }
  }
  return out;
}

namespace {

void split_chords(const Graph& g, const Gf2Vector& cyc, std::vector<Gf2Vector>& out) {
  const auto verts = cycle_vertices(g, cyc);
  std::vector<std::size_t> pos(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < verts.size(); ++i) pos[static_cast<std::size_t>(verts[i])] = i;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (cyc.get(e)) continue;
    auto [u, v] = g.edge(e);
    std::size_t p = pos[static_cast<std::size_t>(u)], q = pos[static_cast<std::size_t>(v)];
    if (p == std::numeric_limits<std::size_t>::max() || q == std::numeric_limits<std::size_t>::max()) continue;
    if (p > q) std::swap(p, q);
    Gf2Vector a(g.edge_count());
    for (std::size_t i = p; i < q; ++i) a.set(g.edge_index(verts[i], verts[i + 1]));
    a.set(e);
    Gf2Vector b = a ^ cyc;
    b.set(e);
    split_chords(g, a, out);
    split_chords(g, b, out);
    return;
  }
  out.push_back(cyc);
}

}  // namespace

std::vector<Gf2Vector> chordless_decomposition(const Graph& g, const Gf2Vector& c) {
  std::vector<Gf2Vector> out;
  for (const auto& cyc : simple_cycle_split(g, c)) split_chords(g, cyc, out);
  return out;
}

std::vector<TildeBasisCycle> h1_basis_tilde(const DeletedGraph& d) {
  const int n = d.n;
  const std::size_t ne = d.graph.edge_count();
  if (n == 3) {
    Gf2Vector all(ne);
    for (std::size_t e = 0; e < ne; ++e) all.set(e);
    return {{std::numeric_limits<std::size_t>::max(), all}};
  }
  std::vector<TildeBasisCycle> out;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (i == j || (i == 2 && j == 1)) continue;
      Gf2Vector c(ne);
      // 1 2' 3 1' i j' in 1-based labels
      c.flip(d.edge_of(0, 1));
      c.flip(d.edge_of(2, 1));
      c.flip(d.edge_of(2, 0));
      c.flip(d.edge_of(i, 0));
      c.flip(d.edge_of(i, j));
      c.flip(d.edge_of(0, j));
      out.push_back({d.edge_of(i, j), std::move(c)});
    }
  return out;
}

Gf2Vector tilde_coordinates(const DeletedGraph& d, const std::vector<TildeBasisCycle>& basis, const Gf2Vector& cycle) {
  Gf2Vector coords(basis.size());
  if (d.n == 3) {
    coords.set(0, cycle.get(0));
    return coords;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) coords.set(i, cycle.get(basis[i].edge));
  return coords;
}

std::vector<Gf2Vector> four_cycle_decomposition(const DeletedGraph& d, const Gf2Vector& c) {
  if (d.n < 4) throw std::invalid_argument("four_cycle_decomposition: needs n >= 4");
  const int n = d.n;
  std::vector<Gf2Vector> out;
  for (const auto& piece : chordless_decomposition(d.graph, c)) {
    const auto verts = cycle_vertices(d.graph, piece);
    if (verts.size() == 4) {
      out.push_back(piece);
      continue;
    }
    if (verts.size() != 6) throw std::logic_error("four_cycle_decomposition: chordless cycle of unexpected length");
    // verts starts at an unprimed vertex: m1 m2' m3 m1' m2 m3'
    const int m1 = verts[0], m2 = verts[1] - n, m3 = verts[2];
    int a = 0;
    while (a == m1 || a == m2 || a == m3) ++a;
    auto four = [&](int x, int yp, int z) {
      Gf2Vector q(d.graph.edge_count());
      q.set(d.edge_of(x, yp));
      q.set(d.edge_of(z, yp));
      q.set(d.edge_of(z, a));
      q.set(d.edge_of(x, a));
      return q;
    };
    Gf2Vector parts[3] = {four(m1, m2, m3), four(m2, m3, m1), four(m3, m1, m2)};
    if ((parts[0] ^ parts[1] ^ parts[2]) != piece) throw std::logic_error("four_cycle_decomposition: 6-cycle split failed");
    for (auto& p : parts) out.push_back(std::move(p));
  }
  return out;
}

SimpleCycles simple_cycles(const Graph& g, const Gf2Vector& mask, std::size_t cap) {
  SimpleCycles res;
  auto& out = res.cycles;
  const auto nv = static_cast<int>(g.vertex_count());
  std::vector<char> on_path(g.vertex_count(), 0);
  Gf2Vector edges(g.edge_count());
  int start = 0;
  int first = -1;
  std::function<void(int)> walk = [&](int v) {
    for (auto e : g.incidence()[static_cast<std::size_t>(v)]) {
      if (!mask.get(e) || edges.get(e)) continue;
      if (out.size() >= cap) {
        res.truncated = true;
        return;
      }
      const int w = g.other_end(e, v);
      if (w == start) {
        if (edges.count() >= 2 && first < v) {
          Gf2Vector cyc = edges;
          cyc.set(e);
          out.push_back(std::move(cyc));
        }
        continue;
      }
      if (w < start || on_path[static_cast<std::size_t>(w)]) continue;
      if (edges.is_zero()) first = w;
      on_path[static_cast<std::size_t>(w)] = 1;
      edges.set(e);
      walk(w);
      edges.set(e, false);
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (start = 0; start < nv; ++start) {
    on_path[static_cast<std::size_t>(start)] = 1;
    walk(start);
    on_path[static_cast<std::size_t>(start)] = 0;
  }
  return res;
}


}  // namespace z2e
