#include "doctest.h"

#include <random>
#include <stdexcept>

#include "z2e/criterion.hpp"
#include "z2e/gram.hpp"

using namespace z2e;

namespace {

Gf2Vector bits(const std::string& s) { return Gf2Vector::from_string(s); }

Gf2Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Gf2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
  return m;
}

// generator values of a BForm realized with the least beta
Gf2Matrix values_for(const Flavor& f, const Gf2Matrix& b, OmegaSpec& spec) {
  spec = {OmegaKind::TypeI, min_beta(b, OmegaKind::TypeI)};
  const auto yb = construct_Y(b, spec);
  return yb * Gf2Matrix::from_columns(f.generators, f.basis_size);
}

}  // namespace

TEST_CASE("homomorphisms from generator values") {
  const JoinComplex j({4, 4});
  const auto octs = j.octahedra();
  const auto p1 = j.chain(octs[0]), p2 = j.chain(octs[1]);
  const auto omega = Gf2Matrix::identity(4);

  const auto psi = hom_from_generators({p1, p2}, {bits("1000"), bits("0100")}, omega);
  CHECK(psi.values.col(0) == bits("1000"));
  CHECK(psi.values.col(1) == bits("0100"));
  CHECK(psi.apply(p1 ^ p2) == bits("1100"));
  CHECK_THROWS_AS(psi.apply(j.chain(octs[5])), std::invalid_argument);

  // redundant generator: value differs by an isotropic vector orthogonal to all values
  const auto red = hom_from_generators({p1, p2, p1 ^ p2}, {bits("1000"), bits("0100"), bits("1111")}, omega);
  CHECK(red.apply(p1 ^ p2) == bits("1100"));
  CHECK(red.apply(p1 ^ p2) != bits("1111"));

  try {
    hom_from_generators({p1, p2, p1 ^ p2}, {bits("1000"), bits("0100"), bits("1110")}, omega);
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.relation == std::vector<std::size_t>{0, 1, 2});
  }
}

TEST_CASE("face maps lift homomorphisms") {
  const auto f = join_flavor(JoinComplex({3, 3}));
  const std::size_t faces = f.complex.face_count();
  std::mt19937_64 rng(9);

  HomMatrix zero{f.basis_chains, Gf2Matrix(3, f.basis_size)};
  CHECK(face_map_from_hom(zero, faces).y.is_zero());

  const auto bd = f.complex.boundary_matrix();
  for (int t = 0; t < 30; ++t) {
    HomMatrix psi{f.basis_chains, random_matrix(3, f.basis_size, rng)};
    const auto y = face_map_from_hom(psi, faces);
    for (std::size_t b = 0; b < f.basis_size; ++b) CHECK(y.hat(f.basis_chains[b]) == psi.values.col(b));
    // adding a coboundary leaves hat(y) unchanged on cycles
    FaceMap y2 = y;
    y2.y ^= random_matrix(3, bd.rows(), rng) * bd;
    for (std::size_t g = 0; g < f.generator_count(); ++g) CHECK(y2.hat(generator_chain(f, g)) == y.hat(generator_chain(f, g)));
  }
}

TEST_CASE("y squared on sums of tori") {
  std::mt19937_64 rng(31);
  for (const auto& sizes : std::vector<std::vector<int>>{{4, 4}, {4, 4, 4}, {5, 4}}) {
    const JoinComplex j(sizes);
    const DeletedProduct dp(top_complex(j));
    const auto octs = j.octahedra();
    for (int t = 0; t < 100; ++t) {
      const std::size_t beta = 1 + rng() % 4;
      const auto omega = (rng() & 1U) ? Gf2Matrix::identity(beta) : Gf2Matrix::hyperbolic((beta + 1) / 2);
      const FaceMap y{random_matrix(omega.rows(), j.top_face_count(), rng)};
      Gf2Vector c = dp.empty_chain();
      bool expect = false;
      for (int q = 0; q < 3; ++q) {
        const auto& p = octs[rng() % octs.size()];
        const auto& r = octs[rng() % octs.size()];
        if (!vertex_disjoint(p, r)) continue;
        c ^= symmetrized_torus(j, dp, p, r);
        expect ^= (omega * y.hat(j.chain(p))).dot(y.hat(j.chain(r)));
      }
      CHECK(y_squared(dp, c, y, omega) == expect);
    }
  }
}

TEST_CASE("y squared on triple deleted products matches s-sums") {
  std::mt19937_64 rng(41);
  for (const auto& sizes : std::vector<std::vector<int>>{{3, 3}, {4, 4}, {3, 3, 3}}) {
    const auto f = join_flavor(JoinComplex(sizes));
    const DeletedProduct dp(f.complex);
    const auto xs = f.join->triple_subcomplexes();
    for (int t = 0; t < 20; ++t) {
      const auto omega = Gf2Matrix::identity(3);
      const FaceMap y{random_matrix(3, f.complex.face_count(), rng)};
      Gf2Matrix v(3, f.generator_count());
      for (std::size_t g = 0; g < f.generator_count(); ++g) v.set_col(g, y.hat(generator_chain(f, g)));
      const auto a = gram(v, omega);
      const std::size_t x = rng() % xs.size();
      CHECK(y_squared(dp, triple_deleted_product(*f.join, dp, xs[x]), y, omega) == s_sum(f, a, x, 0));
    }
  }
}

TEST_CASE("criterion R' verdicts") {
  const auto k33 = join_flavor(JoinComplex({3, 3}));
  const auto ctx = r_prime_context(k33);
  REQUIRE(ctx.cycles.size() == 1);
  CHECK(ctx.v[0]);
  const auto zero = check_R_prime(ctx, FaceMap{Gf2Matrix(2, k33.complex.face_count())}, Gf2Matrix::hyperbolic(1));
  CHECK_FALSE(zero.ok);
  CHECK(zero.failing == std::vector<std::size_t>{0});

  const auto k4 = graph_flavor(complete_graph(4));
  const auto ctx4 = r_prime_context(k4);
  CHECK(check_R_prime(ctx4, FaceMap{Gf2Matrix(0, 6)}, Gf2Matrix(0, 0)).ok);

  // mixed sizes use a symmetric basis; joins of size 4 use tori and triples
  CHECK(r_prime_context(join_flavor(JoinComplex({3, 4}))).labels[0].rfind("symmetric-basis", 0) == 0);
  const auto ctx44 = r_prime_context(join_flavor(JoinComplex({4, 4})));
  CHECK(ctx44.cycles.size() == 18 + 16);
  for (std::size_t i = 0; i < ctx44.cycles.size(); ++i) CHECK(ctx44.v[i] == (ctx44.labels[i].rfind("triple", 0) == 0));
}

TEST_CASE("R' agrees with the matrix conditions on every (3,3) form") {
  const auto f = join_flavor(JoinComplex({3, 3}));
  const auto ctx = r_prime_context(f);
  std::size_t passing = 0;
  for (std::size_t code = 0; code < 1024; ++code) {
    Gf2Vector vars(10);
    for (std::size_t i = 0; i < 10; ++i) vars.set(i, (code >> i) & 1U);
    const auto b = form_from_variables(vars, 4);
    const auto a = bform_expand(f, b);
    const bool matrix_route = is_independent(f, a).ok && is_nontrivial(f, a, NontrivialMode::All).ok;
    OmegaSpec spec;
    const auto values = values_for(f, b, spec);
    const auto omega = omega_matrix(spec);
    CHECK(gram(values, omega) == a);
    const auto y = face_map_from_values(f, values, omega);
    const bool r_route = check_R_prime(ctx, y, omega).ok;
    CHECK(r_route == matrix_route);
    passing += r_route;
  }
  CHECK(passing == 512);
}

TEST_CASE("K5 as a graph") {
  const auto f = graph_flavor(complete_graph(5));
  const auto ctx = r_prime_context(f);
  CHECK_FALSE(ctx.cycles.empty());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    Gf2Matrix b(f.basis_size, f.basis_size);
    for (std::size_t i = 0; i < f.basis_size; ++i)
      for (std::size_t k = i; k < f.basis_size; ++k)
        if (rng() & 1U) {
          b.set(i, k);
          b.set(k, i);
        }
    const auto a = bform_expand(f, b);
    const bool matrix_route = is_independent(f, a).ok && is_nontrivial(f, a, NontrivialMode::All).ok;
    OmegaSpec spec;
    const auto values = values_for(f, b, spec);
    const auto omega = omega_matrix(spec);
    CHECK(check_R_prime(ctx, face_map_from_values(f, values, omega), omega).ok == matrix_route);
  }
}
