#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "z2e/complexes.hpp"

using namespace z2e;

namespace {

bool octahedron_is_cycle(const JoinComplex& j, const Octahedron& p) {
  const auto t = top_complex(j);
  std::vector<int> cover(t.subface_count, 0);
  for (auto f : j.top_faces(p))
    for (auto s : t.boundary[f]) ++cover[s];
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c % 2 == 0; });
}

}  // namespace

TEST_CASE("octahedron counts") {
  CHECK(JoinComplex({3, 3}).octahedra().size() == 9);
  CHECK(JoinComplex({3, 3, 3}).octahedra().size() == 27);
  CHECK(JoinComplex({3, 4}).octahedra().size() == 18);
  CHECK_THROWS_AS(JoinComplex({2, 3}), std::invalid_argument);
}

TEST_CASE("octahedron and triple counts for small joins") {
  for (int k = 1; k <= 2; ++k) {
    std::vector<int> sizes(static_cast<std::size_t>(k + 1), 3);
    while (true) {
      const JoinComplex j(sizes);
      std::size_t pairs = 1, triples = 1;
      for (int n : sizes) {
        pairs *= static_cast<std::size_t>(n * (n - 1) / 2);
        triples *= static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6);
      }
      const auto oct = j.octahedra();
      CHECK(oct.size() == pairs);
      CHECK(j.triple_subcomplexes().size() == triples);
      for (std::size_t i = 0; i < oct.size(); ++i) CHECK(j.octahedron_index(oct[i]) == i);
      CHECK(std::is_sorted(oct.begin(), oct.end()));
      std::size_t s = sizes.size();
      while (s > 0 && sizes[s - 1] == 5) sizes[--s] = 3;
      if (s == 0) break;
      ++sizes[s - 1];
    }
  }
}

TEST_CASE("every octahedron is a cycle with 2^{k+1} faces") {
  for (const auto& sizes : std::vector<std::vector<int>>{{3, 4}, {4, 4, 3}, {3, 3, 3, 3}}) {
    const JoinComplex j(sizes);
    for (const auto& p : j.octahedra()) {
      CHECK(j.top_faces(p).size() == (std::size_t{1} << sizes.size()));
      CHECK(octahedron_is_cycle(j, p));
    }
  }
}

TEST_CASE("face listing matches brute force") {
  const JoinComplex j({3, 4, 3});
  for (int d = 0; d <= 2; ++d) {
    std::vector<Tuple> brute;
    for (int a = -1; a < 3; ++a)
      for (int b = -1; b < 4; ++b)
        for (int c = -1; c < 3; ++c)
          if ((a >= 0) + (b >= 0) + (c >= 0) == d + 1) brute.push_back({a, b, c});
    CHECK(j.faces(d) == brute);
  }
  CHECK(j.face_index({-1, 2, 1}) == 2 * 3 + 1 + 0);
}

TEST_CASE("vertex_disjoint") {
  const Octahedron p{{{0, 1}, {0, 1}}}, q{{{2, 3}, {2, 3}}}, r{{{2, 3}, {0, 2}}};
  CHECK(vertex_disjoint(p, q));
  CHECK_FALSE(vertex_disjoint(p, p));
  CHECK_FALSE(vertex_disjoint(p, r));
}

TEST_CASE("complementary pairs meet exactly in the face") {
  for (const auto& sizes : std::vector<std::vector<int>>{{3, 3}, {4, 3, 5}}) {
    const JoinComplex j(sizes);
    const std::size_t k = sizes.size() - 1;
    for (const auto& x : j.triple_subcomplexes()) {
      const auto faces = j.top_faces(x);
      for (auto f : faces) {
        const auto e = j.top_face(f);
        const auto pairs = complementary_pairs(x, e);
        CHECK(pairs.size() == (std::size_t{1} << k));
        std::set<std::pair<Octahedron, Octahedron>> seen;
        for (const auto& [p, q] : pairs) {
          auto fp = j.top_faces(p), fq = j.top_faces(q);
          std::vector<std::size_t> common;
          std::set_intersection(fp.begin(), fp.end(), fq.begin(), fq.end(), std::back_inserter(common));
          CHECK(common == std::vector<std::size_t>{f});
          for (auto g : fp) CHECK(std::binary_search(faces.begin(), faces.end(), g));
          CHECK(seen.insert(std::minmax(p, q)).second);
        }
      }
    }
  }
  const TripleSubcomplex x{{{0, 1, 2}, {0, 1, 2}}};
  CHECK_THROWS_AS(complementary_pairs(x, {3, 0}), std::invalid_argument);
}

TEST_CASE("kn complementary pairs agree with brute force") {
  const std::vector<int> f{0, 1, 2, 3, 4};
  const auto got = kn_complementary_pairs(f, 0);
  std::set<std::pair<std::vector<int>, std::vector<int>>> brute, mine;
  const auto triples = subsets(5, 3);
  for (const auto& p : triples)
    for (const auto& q : triples) {
      std::vector<int> common;
      std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(common));
      if (common == std::vector<int>{0} && p < q) brute.emplace(p, q);
    }
  for (const auto& [p, q] : got) mine.insert(std::minmax(p, q));
  CHECK(got.size() == 3);
  CHECK(mine == brute);
  CHECK(mine.count({{0, 1, 2}, {0, 3, 4}}));
  CHECK_THROWS_AS(kn_complementary_pairs({0, 1, 2, 3, 4}, 7), std::invalid_argument);
}

TEST_CASE("deleted graph") {
  const auto d3 = deleted_graph(3);
  CHECK(d3.graph.edge_count() == 6);
  CHECK(homeomorphism_type(d3.graph) == HomeoType::Other);
  // walk 1 2' 3 1' 2 3' back to 1, in 0-based labels
  const std::vector<int> walk{0, 3 + 1, 2, 3 + 0, 1, 3 + 2, 0};
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) CHECK(d3.graph.has_edge(walk[i], walk[i + 1]));

  for (int n = 3; n <= 6; ++n) {
    const auto d = deleted_graph(n);
    CHECK(d.graph.edge_count() == static_cast<std::size_t>(n * n - n));
    for (std::size_t e = 0; e < d.graph.edge_count(); ++e) {
      CHECK(d.edge_swap[d.edge_swap[e]] == e);
      CHECK(d.edge_swap[e] != e);
      const auto [u, v] = d.graph.edge(e);
      const auto [a, b] = d.graph.edge(d.edge_swap[e]);
      CHECK(std::minmax<std::size_t>(d.vertex_swap[static_cast<std::size_t>(u)], d.vertex_swap[static_cast<std::size_t>(v)]) ==
            std::minmax<std::size_t>(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    }
  }
  CHECK_THROWS_AS(deleted_graph(2), std::invalid_argument);
}

TEST_CASE("homeomorphism types") {
  CHECK(homeomorphism_type(complete_graph(5)) == HomeoType::K5);
  CHECK(homeomorphism_type(subdivide(complete_graph(5), 3)) == HomeoType::K5);
  CHECK(homeomorphism_type(complete_bipartite(3, 3)) == HomeoType::K33);
  CHECK(homeomorphism_type(disjoint_union(cycle_graph(3), cycle_graph(3))) == HomeoType::DisjointCyclePair);
  CHECK(homeomorphism_type(wheel_graph(4)) == HomeoType::Wheel);
  CHECK(homeomorphism_type(complete_graph(4)) == HomeoType::Wheel);
  CHECK(homeomorphism_type(cycle_graph(5)) == HomeoType::Other);
  CHECK(homeomorphism_type(Graph(4, {{0, 1}, {1, 2}, {1, 3}})) == HomeoType::Other);
  CHECK(homeomorphism_type(complete_graph(6)) == HomeoType::Other);
}

TEST_CASE("homeomorphism type is invariant under subdivision") {
  std::mt19937_64 rng(21);
  const std::vector<Graph> seeds{complete_graph(5), complete_bipartite(3, 3), wheel_graph(5),
                                 disjoint_union(cycle_graph(3), cycle_graph(4)), complete_graph(6)};
  for (const auto& g0 : seeds) {
    const auto type = homeomorphism_type(g0);
    Graph g = g0;
    for (int step = 0; step < 6; ++step) {
      g = subdivide(g, rng() % g.edge_count());
      CHECK(homeomorphism_type(g) == type);
    }
  }
}

TEST_CASE("kuratowski subgraphs") {
  auto count = [](const KuratowskiResult& r, HomeoType t) {
    return std::count_if(r.subgraphs.begin(), r.subgraphs.end(), [&](const auto& s) { return s.type == t; });
  };
  const auto k5 = kuratowski_subgraphs(complete_graph(5));
  CHECK_FALSE(k5.truncated);
  CHECK(count(k5, HomeoType::K5) == 1);
  CHECK(count(k5, HomeoType::K33) == 0);

  const auto k33 = kuratowski_subgraphs(complete_bipartite(3, 3));
  CHECK(count(k33, HomeoType::K33) == 1);
  CHECK(count(k33, HomeoType::K5) == 0);

  const Graph tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(kuratowski_subgraphs(tree).subgraphs.empty());

  const auto g = subdivide(subdivide(complete_graph(5), 0), 4);
  for (const auto& s : kuratowski_subgraphs(g).subgraphs) {
    const auto type = homeomorphism_type(g.subgraph(s.edges));
    CHECK((type == HomeoType::K5 || type == HomeoType::K33));
    CHECK(type == s.type);
  }

  // per branch set: K5 itself, or one of its 10 edges routed through the sixth vertex
  const auto k6 = kuratowski_subgraphs(complete_graph(6));
  CHECK(count(k6, HomeoType::K5) == 6 * 11);
  CHECK(count(k6, HomeoType::K33) > 0);
  for (const auto& s : k6.subgraphs) CHECK(homeomorphism_type(complete_graph(6).subgraph(s.edges)) == s.type);

  // one K5 branch routed along a path with three interior vertices
  const Graph long_branch(8, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                              {0, 5}, {5, 6}, {6, 7}, {7, 1}});
  const auto lb = kuratowski_subgraphs(long_branch);
  CHECK_FALSE(lb.truncated);
  CHECK(count(lb, HomeoType::K5) == 1);
  CHECK(count(lb, HomeoType::K33) == 0);

  KuratowskiLimits tight;
  tight.max_branch_choices = 2;
  CHECK(kuratowski_subgraphs(complete_graph(6), tight).truncated);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("reading graphs") {
  std::istringstream k4("# K4\n4 6\n0 1\n0 2\n0 3\n1 2 # chord\n1 3\n2 3\n");
  const auto g = read_graph(k4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges() == complete_graph(4).edges());

  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  CHECK_THROWS_AS(bad(""), std::invalid_argument);
  CHECK_THROWS_AS(bad("3 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(bad("3 1\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(bad("3 1\n0 1\n1 2\n"), std::invalid_argument);
  CHECK(bad("3 0\n").edge_count() == 0);
}
