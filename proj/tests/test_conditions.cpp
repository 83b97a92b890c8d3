#include "doctest.h"

#include <random>
#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

#include "z2e/conditions.hpp"

using namespace z2e;

namespace {

Gf2Matrix random_symmetric(std::size_t h, std::mt19937_64& rng) {
  Gf2Matrix b(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j)
      if (rng() & 1U) {
        b.set(i, j);
        b.set(j, i);
      }
  return b;
}

// additive iff every column lies in the row space of the coordinate matrix
bool additive_oracle(const Flavor& f, const Gf2Matrix& a) {
  const auto e = Gf2Matrix::from_columns(f.generators, f.basis_size);
  std::vector<Gf2Vector> rows;
  for (std::size_t r = 0; r < e.rows(); ++r) rows.push_back(e.row(r));
  const std::size_t base = rank(Gf2Matrix::from_rows(rows, e.cols()));
  for (std::size_t c = 0; c < a.cols(); ++c) rows.push_back(a.col(c));
  return rank(Gf2Matrix::from_rows(rows, e.cols())) == base;
}

std::set<std::size_t> faces_of(const JoinComplex& j, const Octahedron& p) {
  const auto v = j.top_faces(p);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("form variables") {
  for (std::size_t h : {1U, 2U, 5U, 9U}) {
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = i; j < h; ++j) {
        CHECK(form_variable(i, j, h) == form_variable(j, i, h));
        seen.insert(form_variable(i, j, h));
      }
    CHECK(seen.size() == form_variable_count(h));
    CHECK(*seen.rbegin() == form_variable_count(h) - 1);
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto b = random_symmetric(6, rng);
    CHECK(form_from_variables(form_to_variables(b), 6) == b);
    Gf2Vector u(6), v(6);
    for (std::size_t i = 0; i < 6; ++i) {
      u.set(i, rng() & 1U);
      v.set(i, rng() & 1U);
    }
    CHECK(pairing_functional(u, v).dot(form_to_variables(b)) == pairing(b, u, v));
  }
}

TEST_CASE("join flavor structure") {
  const JoinComplex j({3, 3});
  const auto f = join_flavor(j);
  CHECK(f.generator_count() == 9);
  CHECK(f.basis_size == 4);
  // n = 3 leaves no room for two disjoint pairs
  CHECK(f.disjoint_pairs.empty());
  REQUIRE(f.subobjects.size() == 1);
  CHECK(f.subobjects[0].witnesses.size() == 9);

  for (const auto& sizes : std::vector<std::vector<int>>{{3, 3}, {4, 4}, {3, 3, 3}, {3, 4}}) {
    const JoinComplex jj(sizes);
    const auto ff = join_flavor(jj);
    const auto octs = jj.octahedra();
    std::size_t disjoint = 0;
    for (std::size_t a = 0; a < octs.size(); ++a)
      for (std::size_t b = a + 1; b < octs.size(); ++b) {
        std::vector<std::size_t> common;
        const auto fa = faces_of(jj, octs[a]), fb = faces_of(jj, octs[b]);
        std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));
        if (vertex_disjoint(octs[a], octs[b])) ++disjoint;
      }
    CHECK(ff.disjoint_pairs.size() == disjoint);
    // witness pairs: octahedra inside X whose only common face is e
    const auto xs = jj.triple_subcomplexes();
    for (std::size_t x = 0; x < xs.size(); x += 7) {
      const auto xf = jj.top_faces(xs[x]);
      const std::set<std::size_t> xset(xf.begin(), xf.end());
      for (std::size_t w = 0; w < xf.size(); ++w) {
        std::set<GeneratorPair> brute;
        for (std::size_t a = 0; a < octs.size(); ++a)
          for (std::size_t b = a + 1; b < octs.size(); ++b) {
            const auto fa = faces_of(jj, octs[a]), fb = faces_of(jj, octs[b]);
            if (!std::includes(xset.begin(), xset.end(), fa.begin(), fa.end())) continue;
            if (!std::includes(xset.begin(), xset.end(), fb.begin(), fb.end())) continue;
            std::vector<std::size_t> common;
            std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));
            if (common == std::vector<std::size_t>{xf[w]}) brute.insert({a, b});
          }
        const auto& got = ff.subobjects[x].witnesses[w];
        CHECK(got.size() == (std::size_t{1} << (sizes.size() - 1)));
        CHECK(std::set<GeneratorPair>(got.begin(), got.end()) == brute);
      }
    }
  }
}

TEST_CASE("complete graph flavor structure") {
  const auto f5 = complete_graph_flavor(5);
  CHECK(f5.generator_count() == 10);
  CHECK(f5.basis_size == 6);
  CHECK(f5.disjoint_pairs.empty());
  REQUIRE(f5.subobjects.size() == 1);
  CHECK(f5.subobjects[0].witnesses.size() == 5);
  for (const auto& w : f5.subobjects[0].witnesses) CHECK(w.size() == 3);
  CHECK(f5.relations.size() == 5);
  // two disjoint triangles in [6]: choose one, the other is its complement
  CHECK(complete_graph_flavor(6).disjoint_pairs.size() == 10);
  // basis triangles all contain vertex 0
  for (auto g : f5.basis_generators) CHECK(f5.generator_labels[g].rfind("{0,", 0) == 0);
}

TEST_CASE("expansion is additive and compresses back") {
  std::mt19937_64 rng(11);
  std::vector<Flavor> flavors{join_flavor(JoinComplex({3, 3})), join_flavor(JoinComplex({4, 4})),
                              join_flavor(JoinComplex({3, 3, 3})), join_flavor(JoinComplex({3, 4})),
                              complete_graph_flavor(5), complete_graph_flavor(6), graph_flavor(complete_bipartite(3, 3)),
                              graph_flavor(disjoint_union(cycle_graph(3), cycle_graph(4)))};
  for (const auto& f : flavors) {
    for (int t = 0; t < 20; ++t) {
      const auto b = random_symmetric(f.basis_size, rng);
      const auto a = bform_expand(f, b);
      CHECK(a.is_symmetric());
      CHECK(is_additive(f, a).ok);
      CHECK(additive_oracle(f, a));
      CHECK(oct_compress(f, a) == b);
      // rank and form type survive the expansion
      CHECK(rank(a) == rank(b));
      CHECK(form_type(a) == form_type(b));
    }
    // the relation lists detect exactly the non-additive matrices
    for (int t = 0; t < 20; ++t) {
      auto a = bform_expand(f, random_symmetric(f.basis_size, rng));
      const std::size_t p = rng() % a.rows(), q = rng() % a.rows();
      a.flip(p, q);
      if (p != q) a.flip(q, p);
      CHECK(is_additive(f, a).ok == additive_oracle(f, a));
    }
  }
  // exhaustive round trip on (3,3)
  const auto f = flavors[0];
  for (std::size_t bits = 0; bits < 1024; ++bits) {
    Gf2Vector v(10);
    for (std::size_t i = 0; i < 10; ++i) v.set(i, (bits >> i) & 1U);
    const auto b = form_from_variables(v, 4);
    CHECK(oct_compress(f, bform_expand(f, b)) == b);
  }
  // a random symmetric matrix on (4,4) is not additive
  const auto& f44 = flavors[1];
  const auto bad = random_symmetric(f44.generator_count(), rng);
  const auto r = is_additive(f44, bad);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations[0].size() == 2);
  CHECK_THROWS_AS(oct_compress(f44, bad), std::invalid_argument);
}

TEST_CASE("independence and non-triviality checks") {
  const auto f = join_flavor(JoinComplex({4, 4}));
  const Gf2Matrix zero(f.generator_count(), f.generator_count());
  CHECK(is_independent(f, zero).ok);
  CHECK(is_additive(f, zero).ok);
  CHECK_FALSE(is_nontrivial(f, zero, NontrivialMode::All).ok);
  CHECK(is_nontrivial(f, zero, NontrivialMode::All).violations.size() == 16 * 9);
  CHECK(is_nontrivial(f, zero, NontrivialMode::OneWitness).violations.size() == 16);

  Gf2Matrix ones(f.generator_count(), f.generator_count());
  for (std::size_t i = 0; i < ones.rows(); ++i)
    for (std::size_t k = 0; k < ones.cols(); ++k) ones.set(i, k);
  const auto ind = is_independent(f, ones);
  CHECK_FALSE(ind.ok);
  CHECK(ind.violations.size() == f.disjoint_pairs.size());

  CHECK_THROWS_AS(s_sum(f, zero, 99, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_independent(f, Gf2Matrix(3, 3)), std::invalid_argument);

  // the linear functionals agree with the matrix-level checks
  std::mt19937_64 rng(3);
  const auto lc = linear_conditions(f);
  for (int t = 0; t < 30; ++t) {
    const auto b = random_symmetric(f.basis_size, rng);
    const auto v = form_to_variables(b);
    const auto a = bform_expand(f, b);
    for (std::size_t i = 0; i < lc.independence.size(); ++i) {
      const auto [p, q] = f.disjoint_pairs[i];
      CHECK(lc.independence[i].dot(v) == a.get(p, q));
    }
    for (std::size_t x = 0; x < lc.nontriviality.size(); ++x)
      for (std::size_t e = 0; e < lc.nontriviality[x].size(); ++e) CHECK(lc.nontriviality[x][e].dot(v) == s_sum(f, a, x, e));
  }
}

TEST_CASE("s-sums are constant on independent additive matrices") {
  // exhaustive (3,3)
  const auto f = join_flavor(JoinComplex({3, 3}));
  std::size_t independent = 0;
  for (std::size_t bits = 0; bits < 1024; ++bits) {
    Gf2Vector v(10);
    for (std::size_t i = 0; i < 10; ++i) v.set(i, (bits >> i) & 1U);
    const auto a = bform_expand(f, form_from_variables(v, 4));
    if (!is_independent(f, a).ok) continue;
    ++independent;
    const bool first = s_sum(f, a, 0, 0);
    for (std::size_t e = 0; e < 9; ++e) CHECK(s_sum(f, a, 0, e) == first);
    CHECK(is_nontrivial(f, a, NontrivialMode::OneWitness).ok == is_nontrivial(f, a, NontrivialMode::All).ok);
  }
  CHECK(independent == 1024);

  // sampled (3,3,3) and K5
  std::mt19937_64 rng(17);
  for (const auto& ff : {join_flavor(JoinComplex({3, 3, 3})), complete_graph_flavor(5)}) {
    for (int t = 0; t < 300; ++t) {
      const auto a = bform_expand(ff, random_symmetric(ff.basis_size, rng));
      REQUIRE(is_independent(ff, a).ok);
      for (std::size_t x = 0; x < ff.subobjects.size(); ++x) {
        const bool first = s_sum(ff, a, x, 0);
        for (std::size_t e = 0; e < ff.subobjects[x].witnesses.size(); ++e) CHECK(s_sum(ff, a, x, e) == first);
      }
    }
  }
}

TEST_CASE("graph flavor") {
  // K33 as a graph matches the (3,3) join count of witnesses
  const auto k33 = graph_flavor(complete_bipartite(3, 3));
  CHECK_FALSE(k33.truncated);
  REQUIRE(k33.subobjects.size() == 1);
  CHECK(k33.subobjects[0].witnesses.size() == 9);
  for (const auto& w : k33.subobjects[0].witnesses) CHECK(w.size() == 2);
  CHECK(k33.disjoint_pairs.empty());

  // K5 witnesses: branch triangles meeting only at v
  const auto g5 = complete_graph(5);
  const auto k5 = graph_flavor(g5);
  REQUIRE(k5.subobjects.size() == 1);
  CHECK(k5.subobjects[0].witnesses.size() == 5);
  for (std::size_t v = 0; v < 5; ++v)
    for (const auto& [p, q] : k5.subobjects[0].witnesses[v]) {
      auto verts = [&](std::size_t gi) {
        std::set<int> out;
        const auto chain = Gf2Vector::from_string(k5.generator_labels[gi]);
        for (auto e : chain.support()) {
          out.insert(g5.edge(e).first);
          out.insert(g5.edge(e).second);
        }
        return out;
      };
      const auto a = verts(p), b = verts(q);
      CHECK(a.size() == 3);
      CHECK(b.size() == 3);
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      CHECK(common == std::vector<int>{static_cast<int>(v)});
    }

  // two disjoint triangles: one disjoint pair, nothing else
  const auto tt = graph_flavor(disjoint_union(cycle_graph(3), cycle_graph(3)));
  CHECK(tt.disjoint_pairs.size() == 1);
  CHECK(tt.subobjects.empty());
}

TEST_CASE("graph criterion check") {
  // K4 has no Kuratowski subgraph and no disjoint cycles
  const auto k4 = complete_graph(4);
  const auto r4 = graph_criterion_check(k4, Gf2Matrix(0, 3), Gf2Matrix(0, 0));
  CHECK(r4.holds());

  const auto r5 = graph_criterion_check(complete_graph(5), Gf2Matrix(0, 6), Gf2Matrix(0, 0));
  CHECK(r5.independence);
  CHECK_FALSE(r5.k5_nontriviality);
  CHECK(r5.k33_nontriviality);
  CHECK_FALSE(r5.holds());

  const auto r33 = graph_criterion_check(complete_bipartite(3, 3), Gf2Matrix(0, 4), Gf2Matrix(0, 0));
  CHECK(r33.k5_nontriviality);
  CHECK_FALSE(r33.k33_nontriviality);

  GraphFlavorLimits tiny;
  tiny.max_cycles = 2;
  CHECK(graph_criterion_check(k4, Gf2Matrix(0, 3), Gf2Matrix(0, 0), tiny).inconclusive);
  CHECK_THROWS_AS(graph_criterion_check(k4, Gf2Matrix(1, 2), Gf2Matrix::identity(1)), std::invalid_argument);
}
