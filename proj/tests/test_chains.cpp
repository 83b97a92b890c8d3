#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "z2e/chains.hpp"

using namespace z2e;

namespace {

Gf2Vector random_sum_of_octahedra(const JoinComplex& j, std::mt19937_64& rng) {
  Gf2Vector v(j.top_face_count());
  for (const auto& p : j.octahedra())
    if (rng() & 1U) v ^= j.chain(p);
  return v;
}

Gf2Vector sum_chains(const JoinComplex& j, const std::vector<Octahedron>& ps) {
  Gf2Vector v(j.top_face_count());
  for (const auto& p : ps) v ^= j.chain(p);
  return v;
}

// random element of the cycle space via random fundamental cycles
Gf2Vector random_graph_cycle(const Graph& g, std::mt19937_64& rng) {
  Gf2Vector v(g.edge_count());
  for (const auto& f : fundamental_cycles(g))
    if (rng() & 1U) v ^= f.cycle;
  return v;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> e;
  std::uniform_real_distribution<double> u(0, 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < p) e.emplace_back(a, b);
  return Graph(static_cast<std::size_t>(n), e);
}

}  // namespace

TEST_CASE("boundary and cycles in K33") {
  const JoinComplex j({3, 3});
  Gf2Vector single(9);
  single.set(0);
  CHECK_FALSE(is_cycle(j, 1, single));
  CHECK(is_cycle(j, 1, Gf2Vector(9)));
  for (const auto& p : j.octahedra()) CHECK(is_cycle(j, 1, j.chain(p)));
  CHECK_THROWS_AS(boundary_matrix(j, 2), std::invalid_argument);
}

TEST_CASE("cycle space basis size equals boundary nullity") {
  const std::vector<std::vector<int>> all{{3, 3}, {3, 4}, {4, 3}, {4, 4}, {5, 5}, {3, 5},
                                          {3, 3, 3}, {3, 4, 5}, {4, 4, 4}, {5, 5, 5}};
  for (const auto& sizes : all) {
    const JoinComplex j(sizes);
    const auto b = boundary_matrix(j, j.dim());
    CHECK(cycle_space_basis(j).size() == b.cols() - rank(b));
  }
  CHECK(cycle_space_basis(JoinComplex({3, 3})).size() == 4);
  CHECK(cycle_space_basis(JoinComplex({3, 3, 3})).size() == 8);
  CHECK(cycle_space_basis(JoinComplex({4, 3})).size() == 6);
}

TEST_CASE("face-rook duality") {
  const JoinComplex j({3, 3});
  const Octahedron p{{{0, 1}, {0, 1}}};
  const auto pts = rook_points(j, j.chain(p));
  CHECK(pts == std::vector<Tuple>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(chain_from_points(j, pts) == j.chain(p));
  CHECK(rook_points(j, Gf2Vector(9)).empty());

  // cycles and rook cycles coincide on every subset of faces
  for (std::uint64_t mask = 0; mask < (1U << 9); ++mask) {
    Gf2Vector v(9);
    for (std::size_t i = 0; i < 9; ++i) v.set(i, (mask >> i) & 1U);
    CHECK(is_cycle(j, 1, v) == is_rook_cycle(j, v));
  }
  std::mt19937_64 rng(4);
  const JoinComplex j3({3, 4, 3});
  for (int t = 0; t < 300; ++t) {
    Gf2Vector v(j3.top_face_count());
    for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng() % 5 == 0);
    if (t % 2) v = random_sum_of_octahedra(j3, rng);
    CHECK(is_cycle(j3, 2, v) == is_rook_cycle(j3, v));
  }
}

TEST_CASE("rook decomposition examples") {
  const JoinComplex j({3, 3});
  const auto p = parallelepiped(j, {1, 0});
  CHECK(rook_decomposition(j, j.chain(p)) == std::vector<Octahedron>{p});
  CHECK(rook_decomposition(j, Gf2Vector(9)).empty());

  const auto square = chain_from_points(j, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto parts = rook_decomposition(j, square);
  CHECK(parts.size() == 4);
  CHECK(sum_chains(j, parts) == square);

  Gf2Vector bad(9);
  bad.set(0);
  CHECK_THROWS_AS(rook_decomposition(j, bad), std::invalid_argument);
}

TEST_CASE("rook decomposition round trip on random rook cycles") {
  std::mt19937_64 rng(13);
  for (const auto& sizes : std::vector<std::vector<int>>{{3, 3}, {4, 4}, {3, 3, 3}, {4, 3}, {3, 5, 4}}) {
    const JoinComplex j(sizes);
    for (int t = 0; t < 50; ++t) {
      const auto c = random_sum_of_octahedra(j, rng);
      CHECK(sum_chains(j, rook_decomposition(j, c)) == c);
      // coordinates in the basis reproduce the cycle too
      const auto coords = basis_coordinates(j, c);
      const auto basis = cycle_space_basis(j);
      Gf2Vector back(j.top_face_count());
      for (auto i : coords.support()) back ^= j.chain(basis[i]);
      CHECK(back == c);
    }
  }
}

TEST_CASE("alpha/beta relation reduction") {
  const JoinComplex j({4, 4});
  const AlphaRelation alpha{0, 1, 0, 1, 2};
  const auto r = relation_reduction_k1(j, relation_cycles(alpha));
  CHECK(r.alphas == std::vector<AlphaRelation>{alpha});
  CHECK(r.betas.empty());

  const Octahedron q{{{0, 1}, {0, 1}}};
  const auto empty = relation_reduction_k1(j, {q, q});
  CHECK(empty.alphas.empty());
  CHECK(empty.betas.empty());

  CHECK_THROWS_AS(relation_reduction_k1(j, {q}), std::invalid_argument);

  // random zero-sum combinations: any list of octahedra plus the basis
  // expansion of their sum
  std::mt19937_64 rng(17);
  const auto oct = j.octahedra();
  for (int t = 0; t < 100; ++t) {
    std::vector<Octahedron> rel;
    Gf2Vector s(j.top_face_count());
    for (int i = 0; i < 6; ++i) {
      rel.push_back(oct[rng() % oct.size()]);
      s ^= j.chain(rel.back());
    }
    for (const auto& p : rook_decomposition(j, s)) rel.push_back(p);
    const auto red = relation_reduction_k1(j, rel);
    Gf2Vector formal_in(j.octahedron_count()), formal_out(j.octahedron_count());
    for (const auto& o : rel) formal_in.flip(j.octahedron_index(o));
    for (const auto& a : red.alphas)
      for (const auto& o : relation_cycles(a)) formal_out.flip(j.octahedron_index(o));
    for (const auto& b : red.betas)
      for (const auto& o : relation_cycles(b)) formal_out.flip(j.octahedron_index(o));
    CHECK(formal_in == formal_out);
  }
}

TEST_CASE("fundamental cycles") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_graph(rng, 9, 0.4);
    const auto fc = fundamental_cycles(g);
    std::vector<Gf2Vector> rows;
    for (const auto& f : fc) {
      CHECK(is_graph_cycle(g, f.cycle));
      CHECK(f.cycle.get(f.edge));
      rows.push_back(f.cycle);
    }
    // nullity of the incidence matrix
    Gf2Matrix inc(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      inc.set(static_cast<std::size_t>(g.edge(e).first), e);
      inc.set(static_cast<std::size_t>(g.edge(e).second), e);
    }
    CHECK(fc.size() == g.edge_count() - rank(inc));
    if (!rows.empty()) CHECK(rank(Gf2Matrix::from_rows(rows, g.edge_count())) == fc.size());
    const auto c = random_graph_cycle(g, rng);
    Gf2Vector back(g.edge_count());
    for (auto i : fundamental_coordinates(fc, c).support()) back ^= fc[i].cycle;
    CHECK(back == c);
  }
}

TEST_CASE("chordless decomposition") {
  const auto k4 = complete_graph(4);
  Gf2Vector tri(k4.edge_count());
  tri.set(k4.edge_index(0, 1));
  tri.set(k4.edge_index(1, 2));
  tri.set(k4.edge_index(0, 2));
  CHECK(chordless_decomposition(k4, tri) == std::vector<Gf2Vector>{tri});

  Gf2Vector sq(k4.edge_count());
  sq.set(k4.edge_index(0, 1));
  sq.set(k4.edge_index(1, 2));
  sq.set(k4.edge_index(2, 3));
  sq.set(k4.edge_index(0, 3));
  const auto parts = chordless_decomposition(k4, sq);
  CHECK(parts.size() == 2);
  for (const auto& p : parts) CHECK(p.count() == 3);
  CHECK((parts[0] ^ parts[1]) == sq);

  CHECK(chordless_decomposition(k4, Gf2Vector(k4.edge_count())).empty());

  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_graph(rng, 10, 0.35);
    const auto c = random_graph_cycle(g, rng);
    Gf2Vector sum(g.edge_count());
    for (const auto& p : chordless_decomposition(g, c)) {
      sum ^= p;
      const auto vs = cycle_vertices(g, p);
      CHECK(vs.size() == p.count());
      std::set<int> on(vs.begin(), vs.end());
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (!p.get(e)) CHECK_FALSE((on.count(g.edge(e).first) && on.count(g.edge(e).second)));
    }
    CHECK(sum == c);
  }
}

TEST_CASE("h1 basis of the deleted bipartite graph") {
  const auto d3 = deleted_graph(3);
  const auto b3 = h1_basis_tilde(d3);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].cycle.count() == 6);

  for (int n = 4; n <= 7; ++n) {
    const auto d = deleted_graph(n);
    const auto basis = h1_basis_tilde(d);
    CHECK(basis.size() == static_cast<std::size_t>(n * n - 3 * n + 1));
    // edges minus vertices plus one for the connected graph
    CHECK(basis.size() == d.graph.edge_count() - d.graph.vertex_count() + 1);
    std::vector<Gf2Vector> rows;
    Gf2Vector s(d.graph.edge_count());
    for (const auto& b : basis) {
      CHECK(is_graph_cycle(d.graph, b.cycle));
      rows.push_back(b.cycle);
      s.set(b.edge);
    }
    CHECK(rank(Gf2Matrix::from_rows(rows, d.graph.edge_count())) == basis.size());
    for (const auto& b : basis)
      for (auto e : s.support()) CHECK(b.cycle.get(e) == (e == b.edge));
    // complement of S is a spanning tree
    Gf2Vector tree(d.graph.edge_count());
    for (std::size_t e = 0; e < tree.size(); ++e) tree.set(e, !s.get(e));
    CHECK(tree.count() == d.graph.vertex_count() - 1);
    CHECK(fundamental_cycles(d.graph.subgraph(tree)).empty());

    // t(C_{ij'}) = C_{23'} + C_{ji'} (1-based)
    auto find = [&](int i, int j) -> const Gf2Vector& {
      for (const auto& b : basis)
        if (b.edge == d.edge_of(i, j)) return b.cycle;
      throw std::logic_error("missing basis cycle");
    };
    for (const auto& b : basis) {
      Gf2Vector t(b.cycle.size());
      for (auto e : b.cycle.support()) t.set(d.edge_swap[e]);
      const auto [i, jp] = d.graph.edge(b.edge);
      const int j = jp - n;
      CHECK(t == (find(1, 2) ^ (j == 2 && i == 1 ? Gf2Vector(t.size()) : find(j, i))));
    }
  }
}

TEST_CASE("four-cycle decomposition") {
  const auto d = deleted_graph(5);
  const int n = 5;
  auto cyc = [&](std::vector<int> walk) {
    Gf2Vector v(d.graph.edge_count());
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int a = walk[i], b = walk[(i + 1) % walk.size()];
      const int u = std::min(a, b), w = std::max(a, b);
      v.flip(d.edge_of(u, w - n));
    }
    return v;
  };
  const auto four = cyc({0, n + 1, 2, n + 3});
  CHECK(four_cycle_decomposition(d, four) == std::vector<Gf2Vector>{four});

  // m1 m2' m3 m1' m2 m3' with m = (0,1,2) and a = 3
  const auto six = cyc({0, n + 1, 2, n + 0, 1, n + 2});
  const auto parts = four_cycle_decomposition(d, six);
  CHECK(parts.size() == 3);
  std::set<Gf2Vector> expect{cyc({0, n + 1, 2, n + 3}), cyc({1, n + 2, 0, n + 3}), cyc({2, n + 0, 1, n + 3})};
  CHECK(std::set<Gf2Vector>(parts.begin(), parts.end()) == expect);

  const auto two = cyc({0, n + 1, 2, n + 3}) ^ cyc({1, n + 4, 3, n + 0});
  Gf2Vector sum(d.graph.edge_count());
  for (const auto& p : four_cycle_decomposition(d, two)) sum ^= p;
  CHECK(sum == two);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_graph_cycle(d.graph, rng);
    Gf2Vector s(d.graph.edge_count());
    for (const auto& p : four_cycle_decomposition(d, c)) {
      CHECK(p.count() == 4);
      s ^= p;
    }
    CHECK(s == c);
  }
  CHECK_THROWS_AS(four_cycle_decomposition(deleted_graph(3), h1_basis_tilde(deleted_graph(3))[0].cycle),
                  std::invalid_argument);
}

TEST_CASE("simple cycles match brute force over edge subsets") {
  // oracle: edge sets where every vertex has degree 0 or 2 and the edges are connected
  auto brute = [](const Graph& g) {
    std::set<Gf2Vector> out;
    const std::size_t m = g.edge_count();
    for (std::size_t bits = 1; bits < (std::size_t{1} << m); ++bits) {
      std::vector<int> deg(g.vertex_count(), 0);
      Gf2Vector s(m);
      for (std::size_t e = 0; e < m; ++e)
        if ((bits >> e) & 1U) {
          s.set(e);
          ++deg[static_cast<std::size_t>(g.edge(e).first)];
          ++deg[static_cast<std::size_t>(g.edge(e).second)];
        }
      if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
      // connected: grow from one edge
      std::set<int> reach{g.edge(s.first()).first};
      for (bool grown = true; grown;) {
        grown = false;
        for (auto e : s.support()) {
          const auto [u, v] = g.edge(e);
          if (reach.count(u) != reach.count(v)) {
            reach.insert(u);
            reach.insert(v);
            grown = true;
          }
        }
      }
      const auto sup = s.support();
      if (std::all_of(sup.begin(), sup.end(), [&](std::size_t e) { return reach.count(g.edge(e).first) > 0; }))
        out.insert(s);
    }
    return out;
  };
  for (const auto& g : {complete_graph(4), complete_graph(5), complete_bipartite(3, 3), wheel_graph(5),
                        disjoint_union(cycle_graph(3), cycle_graph(4))}) {
    Gf2Vector all(g.edge_count());
    for (std::size_t e = 0; e < all.size(); ++e) all.set(e);
    const auto got = simple_cycles(g, all, 1'000'000);
    CHECK_FALSE(got.truncated);
    const std::set<Gf2Vector> as_set(got.cycles.begin(), got.cycles.end());
    CHECK(as_set.size() == got.cycles.size());
    CHECK(as_set == brute(g));
  }
  CHECK(simple_cycles(complete_graph(5), Gf2Vector::from_string("1111111111"), 1'000'000).cycles.size() == 37);
  CHECK(simple_cycles(complete_graph(5), Gf2Vector::from_string("1111111111"), 5).truncated);
}
