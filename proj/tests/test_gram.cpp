#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "z2e/gram.hpp"

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

// every Gram matrix reachable from some beta x n matrix Y
std::set<std::vector<std::string>> brute_force_grams(std::size_t n, const OmegaSpec& spec) {
  const auto omega = omega_matrix(spec);
  std::set<std::vector<std::string>> out;
  const std::size_t bits = n * spec.beta;
  for (std::size_t code = 0; code < (std::size_t{1} << bits); ++code) {
    Gf2Matrix y(spec.beta, n);
    for (std::size_t b = 0; b < bits; ++b)
      if ((code >> b) & 1U) y.set(b / n, b % n);
    out.insert(gram(y, omega).to_strings());
  }
  return out;
}

}  // namespace

TEST_CASE("omega matrices") {
  CHECK(omega_matrix({OmegaKind::TypeI, 3}) == Gf2Matrix::identity(3));
  CHECK(omega_matrix({OmegaKind::TypeH, 4}) == Gf2Matrix::hyperbolic(2));
  CHECK_THROWS_AS(omega_matrix({OmegaKind::TypeH, 3}), std::invalid_argument);
}

TEST_CASE("realizable agrees with enumeration of Y") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Gf2Matrix> all;
    const std::size_t vars = n * (n + 1) / 2;
    for (std::size_t code = 0; code < (std::size_t{1} << vars); ++code) {
      Gf2Matrix a(n, n);
      std::size_t b = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++b)
          if ((code >> b) & 1U) {
            a.set(i, j);
            a.set(j, i);
          }
      all.push_back(a);
    }
    for (std::size_t beta = 0; beta <= 4; ++beta)
      for (auto kind : {OmegaKind::TypeI, OmegaKind::TypeH}) {
        if (kind == OmegaKind::TypeH && beta % 2) continue;
        const OmegaSpec spec{kind, beta};
        const auto reach = brute_force_grams(n, spec);
        for (const auto& a : all) {
          const bool expect = reach.count(a.to_strings()) > 0;
          CHECK(realizable(a, spec) == expect);
          if (expect) CHECK(gram(construct_Y(a, spec), omega_matrix(spec)) == a);
        }
      }
  }
}

TEST_CASE("small examples") {
  const auto h1 = Gf2Matrix::hyperbolic(1);
  CHECK(realizable(Gf2Matrix::identity(2), {OmegaKind::TypeI, 2}));
  CHECK_FALSE(realizable(h1, {OmegaKind::TypeI, 2}));
  CHECK(realizable(h1, {OmegaKind::TypeI, 3}));
  CHECK_FALSE(realizable(Gf2Matrix::identity(1), {OmegaKind::TypeH, 4}));

  const auto y = construct_Y(h1, {OmegaKind::TypeI, 3});
  CHECK(y.col(0).count() % 2 == 0);
  CHECK(y.col(1).count() % 2 == 0);
  CHECK(y.col(0).dot(y.col(1)));
  CHECK(construct_Y(Gf2Matrix(3, 3), {OmegaKind::TypeH, 2}).is_zero());
  CHECK_THROWS_AS(construct_Y(h1, {OmegaKind::TypeI, 2}), std::invalid_argument);

  CHECK(min_beta(Gf2Matrix::identity(3), OmegaKind::TypeI) == 3);
  CHECK(min_beta(h1, OmegaKind::TypeI) == 3);
  CHECK(min_beta(h1, OmegaKind::TypeH) == 2);
  CHECK(min_beta(Gf2Matrix(2, 2), OmegaKind::TypeI) == 0);
  CHECK_THROWS_AS(min_beta(Gf2Matrix::identity(1), OmegaKind::TypeH), std::invalid_argument);
  CHECK_THROWS_AS(realizable(Gf2Matrix(2, 3), {OmegaKind::TypeI, 2}), std::invalid_argument);
}

TEST_CASE("random round trips and monotonicity") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const auto a = random_symmetric(n, rng);
    const bool alt = form_type(a) == FormType::Alternating;
    for (auto kind : {OmegaKind::TypeI, OmegaKind::TypeH}) {
      if (kind == OmegaKind::TypeH && !alt) continue;
      const std::size_t m = min_beta(a, kind);
      if (kind == OmegaKind::TypeH) CHECK(m % 2 == 0);
      const std::size_t step = kind == OmegaKind::TypeH ? 2 : 1;
      if (m >= step) CHECK_FALSE(realizable(a, {kind, m - step}));
      for (std::size_t beta = m; beta <= m + 2 * step; beta += step) {
        const OmegaSpec spec{kind, beta};
        REQUIRE(realizable(a, spec));
        const auto y = construct_Y(a, spec);
        CHECK(y.rows() == beta);
        CHECK(gram(y, omega_matrix(spec)) == a);
        CHECK(construct_Y(a, spec) == y);
      }
    }
  }
}
