#include "z2e/complexes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace z2e {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t pair_index(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= n || a == b) throw std::invalid_argument("pair_index: not a 2-subset of [n]");
  const auto ua = static_cast<std::size_t>(a), un = static_cast<std::size_t>(n);
  return ua * (2 * un - ua - 1) / 2 + static_cast<std::size_t>(b - a - 1);
}

std::pair<int, int> pair_at(std::size_t index, int n) {
  for (int a = 0; a < n; ++a) {
    const auto row = static_cast<std::size_t>(n - a - 1);
    if (index < row) return {a, a + 1 + static_cast<int>(index)};
    index -= row;
  }
  throw std::out_of_range("pair_at: index out of range");
}

// ---------------------------------------------------------------- JoinComplex

JoinComplex::JoinComplex(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("join needs at least one factor");
  for (int n : sizes_)
    if (n < 3) throw std::invalid_argument("join factors must have at least 3 elements (got " + std::to_string(n) + ")");
}

std::string JoinComplex::descriptor() const {
  std::string s = "join:";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sizes_[i]);
  }
  return s;
}

std::size_t JoinComplex::vertex_count() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0},
                         [](std::size_t acc, int n) { return acc + static_cast<std::size_t>(n); });
}

std::size_t JoinComplex::vertex_id(int coord, int a) const {
  std::size_t off = 0;
  for (int i = 0; i < coord; ++i) off += static_cast<std::size_t>(sizes_[static_cast<std::size_t>(i)]);
  return off + static_cast<std::size_t>(a);
}

std::size_t JoinComplex::top_face_count() const {
  std::size_t c = 1;
  for (int n : sizes_) c *= static_cast<std::size_t>(n);
  return c;
}

std::size_t JoinComplex::top_index(const Tuple& face) const {
  if (face.size() != sizes_.size()) throw std::invalid_argument("top_index: wrong tuple length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (face[i] < 0 || face[i] >= sizes_[i]) throw std::invalid_argument("top_index: coordinate out of range");
    idx = idx * static_cast<std::size_t>(sizes_[i]) + static_cast<std::size_t>(face[i]);
  }
  return idx;
}

Tuple JoinComplex::top_face(std::size_t index) const {
  Tuple t(sizes_.size());
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(sizes_[i]);
    t[i] = static_cast<int>(index % n);
    index /= n;
  }
  return t;
}

std::size_t JoinComplex::face_count(int j) const { return faces(j).size(); }

std::vector<Tuple> JoinComplex::faces(int j) const {
  const int k = dim();
  if (j < 0 || j > k) throw std::invalid_argument("faces: dimension out of range");
  std::vector<Tuple> out;
  Tuple cur(sizes_.size(), kBlank);
  // odometer over digits blank,0,...,n_i-1 gives lexicographic order
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == sizes_.size()) {
      if (used == j + 1) out.push_back(cur);
      return;
    }
    const int after = static_cast<int>(sizes_.size() - i - 1);
    if (used + after >= j + 1) {
      cur[i] = kBlank;
      rec(i + 1, used);
    }
    if (used < j + 1) {
      for (int a = 0; a < sizes_[i]; ++a) {
        cur[i] = a;
        rec(i + 1, used + 1);
      }
    }
    cur[i] = kBlank;
  };
  rec(0, 0);
  return out;
}

std::size_t JoinComplex::face_index(const Tuple& face) const {
  int used = 0;
  for (int a : face) used += a != kBlank;
  const auto all = faces(used - 1);
  auto it = std::lower_bound(all.begin(), all.end(), face);
  if (it == all.end() || *it != face) throw std::invalid_argument("face_index: not a face");
  return static_cast<std::size_t>(it - all.begin());
}

std::size_t JoinComplex::octahedron_count() const {
  std::size_t c = 1;
  for (int n : sizes_) c *= binomial(static_cast<std::size_t>(n), 2);
  return c;
}

std::vector<Octahedron> JoinComplex::octahedra() const {
  std::vector<Octahedron> out;
  out.reserve(octahedron_count());
  for (std::size_t i = 0; i < octahedron_count(); ++i) out.push_back(octahedron_at(i));
  return out;
}

std::size_t JoinComplex::octahedron_index(const Octahedron& p) const {
  if (p.pairs.size() != sizes_.size()) throw std::invalid_argument("octahedron_index: wrong number of pairs");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i)
    idx = idx * binomial(static_cast<std::size_t>(sizes_[i]), 2) + pair_index(p.pairs[i][0], p.pairs[i][1], sizes_[i]);
  return idx;
}

Octahedron JoinComplex::octahedron_at(std::size_t index) const {
  Octahedron p;
  p.pairs.resize(sizes_.size());
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    const std::size_t c = binomial(static_cast<std::size_t>(sizes_[i]), 2);
    auto [a, b] = pair_at(index % c, sizes_[i]);
    p.pairs[i] = {a, b};
    index /= c;
  }
  return p;
}

std::vector<std::size_t> JoinComplex::top_faces(const Octahedron& p) const {
  const std::size_t d = sizes_.size();
  std::vector<std::size_t> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    Tuple t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = p.pairs[i][(mask >> (d - 1 - i)) & 1U];
    out.push_back(top_index(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Gf2Vector JoinComplex::chain(const Octahedron& p) const {
  Gf2Vector v(top_face_count());
  for (auto f : top_faces(p)) v.set(f);
  return v;
}

std::size_t JoinComplex::triple_count() const {
  std::size_t c = 1;
  for (int n : sizes_) c *= binomial(static_cast<std::size_t>(n), 3);
  return c;
}

std::vector<TripleSubcomplex> JoinComplex::triple_subcomplexes() const {
  std::vector<std::vector<std::vector<int>>> per;
  for (int n : sizes_) per.push_back(subsets(n, 3));
  std::vector<TripleSubcomplex> out;
  std::vector<std::size_t> digit(sizes_.size(), 0);
  while (true) {
    TripleSubcomplex x;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      const auto& s = per[i][digit[i]];
      x.triples.push_back({s[0], s[1], s[2]});
    }
    out.push_back(std::move(x));
    std::size_t i = sizes_.size();
    while (i > 0) {
      --i;
      if (++digit[i] < per[i].size()) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<std::size_t> JoinComplex::top_faces(const TripleSubcomplex& x) const {
  const std::size_t d = sizes_.size();
  std::vector<std::size_t> out;
  std::vector<std::size_t> digit(d, 0);
  while (true) {
    Tuple t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = x.triples[i][digit[i]];
    out.push_back(top_index(t));
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (++digit[i] < 3) {
        done = false;
        break;
      }
      digit[i] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool JoinComplex::faces_disjoint(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != kBlank && a[i] == b[i]) return false;
  return true;
}

bool vertex_disjoint(const Octahedron& p, const Octahedron& q) {
  if (p.pairs.size() != q.pairs.size()) throw std::invalid_argument("vertex_disjoint: octahedra of different joins");
  for (std::size_t i = 0; i < p.pairs.size(); ++i)
    for (int a : p.pairs[i])
      if (a == q.pairs[i][0] || a == q.pairs[i][1]) return false;
  return true;
}

std::vector<std::pair<Octahedron, Octahedron>> complementary_pairs(const TripleSubcomplex& x, const Tuple& e) {
  const std::size_t d = x.triples.size();
  if (e.size() != d) throw std::invalid_argument("complementary_pairs: face has wrong length");
  std::vector<std::array<int, 2>> rest(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& t = x.triples[i];
    if (std::find(t.begin(), t.end(), e[i]) == t.end())
      throw std::invalid_argument("complementary_pairs: face is not in the subcomplex");
    std::size_t r = 0;
    for (int a : t)
      if (a != e[i]) rest[i][r++] = a;
  }
  auto make = [](int v, int w) { return std::array<int, 2>{std::min(v, w), std::max(v, w)}; };
  std::vector<std::pair<Octahedron, Octahedron>> out;
  // coordinate 0 is fixed by the orientation convention
  for (std::size_t mask = 0; mask < (std::size_t{1} << (d - 1)); ++mask) {
    Octahedron p, q;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t bit = i == 0 ? 0 : (mask >> (d - 1 - i)) & 1U;
      p.pairs.push_back(make(e[i], rest[i][bit]));
      q.pairs.push_back(make(e[i], rest[i][1 - bit]));
    }
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

CompleteGraphStructures kn_structures(int n) {
  return {subsets(n, 3), subsets(n, 4), subsets(n, 5)};
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> kn_complementary_pairs(const std::vector<int>& f, int v) {
  if (f.size() != 5) throw std::invalid_argument("kn_complementary_pairs: expected a 5-element set");
  if (std::find(f.begin(), f.end(), v) == f.end())
    throw std::invalid_argument("kn_complementary_pairs: vertex is not in the set");
  std::vector<int> rest;
  for (int a : f)
    if (a != v) rest.push_back(a);
  std::sort(rest.begin(), rest.end());
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  // rest[0] goes to P together with one partner; the other two go to Q
  for (int partner = 1; partner < 4; ++partner) {
    std::vector<int> p{v, rest[0], rest[static_cast<std::size_t>(partner)]}, q{v};
    for (int i = 1; i < 4; ++i)
      if (i != partner) q.push_back(rest[static_cast<std::size_t>(i)]);
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices), edges_(std::move(edges)), incidence_(vertices),
      adjacency_(vertices, std::vector<int>(vertices, -1)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& [u, v] = edges_[e];
    if (u > v) std::swap(u, v);
    if (u < 0 || static_cast<std::size_t>(v) >= vertices_) throw std::invalid_argument("graph edge has a vertex out of range");
    if (u == v) throw std::invalid_argument("graph loops are not allowed");
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    if (adjacency_[su][sv] != -1) throw std::invalid_argument("graph multi-edges are not allowed");
    adjacency_[su][sv] = adjacency_[sv][su] = static_cast<int>(e);
    incidence_[su].push_back(e);
    incidence_[sv].push_back(e);
  }
}

std::size_t Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertices_ || static_cast<std::size_t>(v) >= vertices_)
    return edges_.size();
  const int e = adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  return e < 0 ? edges_.size() : static_cast<std::size_t>(e);
}

Graph Graph::subgraph(const Gf2Vector& mask) const {
  std::vector<std::pair<int, int>> kept;
  for (auto e : mask.support()) kept.push_back(edges_[e]);
  return Graph(vertices_, std::move(kept));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(static_cast<std::size_t>(n), std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(static_cast<std::size_t>(a + b), std::move(e));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<std::size_t>(n), std::move(e));
}

Graph wheel_graph(int rim) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < rim; ++i) e.emplace_back(i, (i + 1) % rim);
  for (int i = 0; i < rim; ++i) e.emplace_back(i, rim);
  return Graph(static_cast<std::size_t>(rim + 1), std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  const int off = static_cast<int>(a.vertex_count());
  for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(e));
}

Graph read_graph(std::istream& in) {
  std::stringstream clean;
  std::string line;
  while (std::getline(in, line)) clean << line.substr(0, line.find('#')) << '\n';
  long long v = 0, e = 0;
  if (!(clean >> v >> e) || v < 0 || e < 0) throw std::invalid_argument("graph file must start with 'V E'");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < e; ++i) {
    long long a = 0, b = 0;
    if (!(clean >> a >> b)) throw std::invalid_argument("graph file has fewer than E edges");
    if (a < 0 || b < 0 || a >= v || b >= v) throw std::invalid_argument("graph edge out of range");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  std::string extra;
  if (clean >> extra) throw std::invalid_argument("graph file has trailing data");
  return Graph(static_cast<std::size_t>(v), edges);
}

Graph subdivide(const Graph& g, std::size_t e) {
  auto edges = g.edges();
  const auto [u, v] = edges.at(e);
  const int w = static_cast<int>(g.vertex_count());
  edges[e] = {u, w};
  edges.emplace_back(w, v);
  return Graph(g.vertex_count() + 1, std::move(edges));
}

DeletedGraph deleted_graph(int n) {
  if (n < 3) throw std::invalid_argument("deleted_graph: n must be at least 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.emplace_back(i, n + j);
  DeletedGraph d;
  d.n = n;
  d.graph = Graph(static_cast<std::size_t>(2 * n), std::move(e));
  d.vertex_swap.resize(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    d.vertex_swap[static_cast<std::size_t>(j)] = static_cast<std::size_t>(n + j);
    d.vertex_swap[static_cast<std::size_t>(n + j)] = static_cast<std::size_t>(j);
  }
  d.edge_swap.resize(d.graph.edge_count());
  for (std::size_t k = 0; k < d.graph.edge_count(); ++k) {
    const auto [i, jp] = d.graph.edge(k);
    d.edge_swap[k] = d.edge_of(jp - n, i);
  }
  return d;
}

// ---------------------------------------------------------------- homeomorphism type

const char* to_string(HomeoType t) {
  switch (t) {
    case HomeoType::K5: return "K5";
    case HomeoType::K33: return "K33";
    case HomeoType::DisjointCyclePair: return "DisjointCyclePair";
    case HomeoType::Wheel: return "Wheel";
    case HomeoType::Other: return "Other";
  }
  return "Other";
}

namespace {

// connected components of the non-isolated vertices
std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1 || g.degree(static_cast<int>(s)) == 0) continue;
    std::vector<int> stack{static_cast<int>(s)}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto e : g.incidence()[static_cast<std::size_t>(v)]) {
        const int w = g.other_end(e, v);
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_k5(const std::vector<std::vector<bool>>& adj) {
  if (adj.size() != 5) return false;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j && !adj[i][j]) return false;
  return true;
}

bool is_k33(const std::vector<std::vector<bool>>& adj) {
  if (adj.size() != 6) return false;
  // vertex 0 is in part A; its neighbours form part B
  std::vector<int> side(6, 0);
  std::size_t b = 0;
  for (std::size_t j = 1; j < 6; ++j)
    if (adj[0][j]) {
      side[j] = 1;
      ++b;
    }
  if (b != 3) return false;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (adj[i][j] != (side[i] != side[j])) return false;
  return true;
}

bool is_wheel(const std::vector<std::vector<bool>>& adj) {
  const std::size_t m = adj.size();
  if (m < 4) return false;
  for (std::size_t hub = 0; hub < m; ++hub) {
    bool hub_ok = true;
    for (std::size_t j = 0; j < m; ++j)
      if (j != hub && !adj[hub][j]) hub_ok = false;
    if (!hub_ok) continue;
    // the rim must be a single cycle through all other vertices
    std::vector<std::size_t> rim;
    for (std::size_t j = 0; j < m; ++j)
      if (j != hub) rim.push_back(j);
    bool deg_ok = true;
    for (auto v : rim) {
      std::size_t d = 0;
      for (auto w : rim) d += adj[v][w];
      if (d != 2) deg_ok = false;
    }
    if (!deg_ok) continue;
    std::vector<bool> seen(m, false);
    std::size_t prev = m, cur = rim.front(), len = 0;
    while (!seen[cur]) {
      seen[cur] = true;
      ++len;
      std::size_t nxt = m;
      for (auto w : rim)
        if (adj[cur][w] && w != prev && !seen[w]) {
          nxt = w;
          break;
        }
      if (nxt == m) break;
      prev = cur;
      cur = nxt;
    }
    if (len == rim.size()) return true;
  }
  return false;
}

}  // namespace

BranchStructure branch_structure(const Graph& g) {
  BranchStructure bs;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<int>(v)) >= 3) bs.branch_vertices.push_back(static_cast<int>(v));
  bs.edge_branch.assign(g.edge_count(), std::numeric_limits<std::size_t>::max());
  for (int start : bs.branch_vertices) {
    for (auto e0 : g.incidence()[static_cast<std::size_t>(start)]) {
      if (bs.edge_branch[e0] != std::numeric_limits<std::size_t>::max()) continue;
      const std::size_t id = bs.endpoints.size();
      std::vector<std::size_t> path{e0};
      bs.edge_branch[e0] = id;
      int prev = start, cur = g.other_end(e0, start);
      std::size_t e = e0;
      while (g.degree(cur) == 2) {
        const auto& inc = g.incidence()[static_cast<std::size_t>(cur)];
        const std::size_t nxt = inc[0] == e ? inc[1] : inc[0];
        prev = cur;
        cur = g.other_end(nxt, cur);
        e = nxt;
        path.push_back(e);
        bs.edge_branch[e] = id;
      }
      (void)prev;
      bs.endpoints.emplace_back(std::min(start, cur), std::max(start, cur));
      bs.edges.push_back(std::move(path));
    }
  }
  return bs;
}

HomeoType homeomorphism_type(const Graph& g) {
  if (g.edge_count() == 0) return HomeoType::Other;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<int>(v)) == 1) return HomeoType::Other;

  const auto comps = components(g);
  auto is_cycle = [&](const std::vector<int>& c) {
    return std::all_of(c.begin(), c.end(), [&](int v) { return g.degree(v) == 2; });
  };
  if (comps.size() == 2 && is_cycle(comps[0]) && is_cycle(comps[1])) return HomeoType::DisjointCyclePair;
  if (comps.size() != 1 || is_cycle(comps[0])) return HomeoType::Other;

  const auto bs = branch_structure(g);
  // every edge lies on a branch between branch vertices here
  const std::size_t m = bs.branch_vertices.size();
  std::vector<std::size_t> pos(g.vertex_count(), m);
  for (std::size_t i = 0; i < m; ++i) pos[static_cast<std::size_t>(bs.branch_vertices[i])] = i;
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (auto [u, v] : bs.endpoints) {
    if (u == v) return HomeoType::Other;  // loop after suppression
    const auto a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
    if (adj[a][b]) return HomeoType::Other;  // multi-edge after suppression
    adj[a][b] = adj[b][a] = true;
  }
  if (is_k5(adj)) return HomeoType::K5;
  if (is_k33(adj)) return HomeoType::K33;
  if (is_wheel(adj)) return HomeoType::Wheel;
  return HomeoType::Other;
}

// ---------------------------------------------------------------- Kuratowski

namespace {

struct PathSearch {
  const Graph& g;
  std::vector<bool> blocked;  // vertices unavailable as interior points
  std::vector<std::size_t> path_edges;

  // calls f(path edges) for every simple path src -> dst with unblocked interior
  template <class F>
  void enumerate(int src, int dst, F&& f) {
    for (auto e : g.incidence()[static_cast<std::size_t>(src)]) {
      const int w = g.other_end(e, src);
      path_edges.push_back(e);
      if (w == dst) {
        f(path_edges);
      } else if (!blocked[static_cast<std::size_t>(w)]) {
        blocked[static_cast<std::size_t>(w)] = true;
        enumerate(w, dst, f);
        blocked[static_cast<std::size_t>(w)] = false;
      }
      path_edges.pop_back();
    }
  }
};

}  // namespace

KuratowskiResult kuratowski_subgraphs(const Graph& g, const KuratowskiLimits& limits) {
  KuratowskiResult result;
  std::set<Gf2Vector> seen;
  std::size_t choices = 0;
  const int nv = static_cast<int>(g.vertex_count());

  // assigns internally disjoint paths to the branch edges in order
  auto realize = [&](HomeoType type, const std::vector<int>& branch, const std::vector<std::pair<int, int>>& links) {
    PathSearch ps{g, std::vector<bool>(g.vertex_count(), false), {}};
    for (int b : branch) ps.blocked[static_cast<std::size_t>(b)] = true;
    std::vector<Gf2Vector> paths;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (result.truncated) return;
      if (i == links.size()) {
        Gf2Vector all(g.edge_count());
        for (const auto& p : paths) all ^= p;
        if (seen.insert(all).second) {
          if (result.subgraphs.size() >= limits.max_subgraphs) {
            result.truncated = true;
            return;
          }
          result.subgraphs.push_back({type, all, branch, paths});
        }
        return;
      }
      ps.enumerate(links[i].first, links[i].second, [&](const std::vector<std::size_t>& edges) {
        if (result.truncated) return;
        // interior vertices of this path stay blocked by the search while
        // later paths are chosen
        Gf2Vector p(g.edge_count());
        for (auto e : edges) p.set(e);
        paths.push_back(std::move(p));
        // the path search itself toggles blocked flags, so save the stack
        auto saved = ps.path_edges;
        ps.path_edges.clear();
        rec(i + 1);
        ps.path_edges = std::move(saved);
        paths.pop_back();
      });
    };
    rec(0);
  };

  std::vector<int> deg4, deg3;
  for (int v = 0; v < nv; ++v) {
    if (g.degree(v) >= 4) deg4.push_back(v);
    if (g.degree(v) >= 3) deg3.push_back(v);
  }

  for (const auto& idx : subsets(static_cast<int>(deg4.size()), 5)) {
    if (++choices > limits.max_branch_choices) {
      result.truncated = true;
      return result;
    }
    std::vector<int> branch;
    for (int i : idx) branch.push_back(deg4[static_cast<std::size_t>(i)]);
    std::vector<std::pair<int, int>> links;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b) links.emplace_back(branch[a], branch[b]);
    realize(HomeoType::K5, branch, links);
    if (result.truncated) return result;
  }

  for (const auto& idx : subsets(static_cast<int>(deg3.size()), 6)) {
    std::vector<int> six;
    for (int i : idx) six.push_back(deg3[static_cast<std::size_t>(i)]);
    // part A holds six[0] and two more
    for (const auto& pick : subsets(5, 2)) {
      if (++choices > limits.max_branch_choices) {
        result.truncated = true;
        return result;
      }
      std::vector<int> a{six[0], six[static_cast<std::size_t>(pick[0] + 1)], six[static_cast<std::size_t>(pick[1] + 1)]};
      std::vector<int> b;
      for (std::size_t i = 1; i < 6; ++i)
        if (six[i] != a[1] && six[i] != a[2]) b.push_back(six[i]);
      std::vector<int> branch = a;
      branch.insert(branch.end(), b.begin(), b.end());
      std::vector<std::pair<int, int>> links;
      for (int x : a)
        for (int y : b) links.emplace_back(x, y);
      realize(HomeoType::K33, branch, links);
      if (result.truncated) return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------- TopComplex

bool TopComplex::disjoint(std::size_t a, std::size_t b) const {
  const auto& x = vertices[a];
  const auto& y = vertices[b];
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return false;
    if (x[i] < y[j])
      ++i;
    else
      ++j;
  }
  return true;
}

Gf2Matrix TopComplex::boundary_matrix() const {
  Gf2Matrix m(subface_count, face_count());
  for (std::size_t f = 0; f < face_count(); ++f)
    for (auto s : boundary[f]) m.flip(s, f);
  return m;
}

TopComplex top_complex(const JoinComplex& j) {
  TopComplex t;
  t.dim = j.dim();
  t.vertex_count = j.vertex_count();
  const auto sub = j.faces(j.dim() - 1 < 0 ? 0 : j.dim() - 1);
  if (j.dim() == 0) {
    // points: boundary is the empty face; treat as no boundary
    t.subface_count = 0;
  } else {
    t.subface_count = sub.size();
  }
  const std::size_t d = j.sizes().size();
  for (std::size_t f = 0; f < j.top_face_count(); ++f) {
    const Tuple face = j.top_face(f);
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < d; ++i) verts.push_back(j.vertex_id(static_cast<int>(i), face[i]));
    t.vertices.push_back(std::move(verts));
    std::vector<std::size_t> bd;
    if (j.dim() > 0) {
      for (std::size_t i = 0; i < d; ++i) {
        Tuple b = face;
        b[i] = kBlank;
        auto it = std::lower_bound(sub.begin(), sub.end(), b);
        bd.push_back(static_cast<std::size_t>(it - sub.begin()));
      }
    }
    t.boundary.push_back(std::move(bd));
  }
  return t;
}

TopComplex top_complex(const Graph& g) {
  TopComplex t;
  t.dim = 1;
  t.vertex_count = g.vertex_count();
  t.subface_count = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    t.vertices.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
    t.boundary.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  return t;
}

}  // namespace z2e
