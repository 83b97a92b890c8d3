#include "z2e/vankampen.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <string>
#include <utility>

namespace z2e {

namespace {

using Rational = boost::multiprecision::cpp_rational;

enum class Meeting { Miss, Cross, Parallel, Degenerate };

// Solves sum l_i p_i - sum m_j q_j = 0, sum l = 1, sum m = 1 exactly.
Meeting classify(const std::vector<std::size_t>& sigma, const std::vector<std::size_t>& tau, const Drawing& d) {
  const std::size_t dim = d.ambient_dim;
  const std::size_t n = sigma.size() + tau.size();
  if (n != dim + 2) throw std::invalid_argument("faces must have k+1 vertices in R^{2k}");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t c = 0; c < sigma.size(); ++c) {
    const auto& p = d.points.at(sigma[c]);
    for (std::size_t r = 0; r < dim; ++r) m[r][c] = p[r];
    m[dim][c] = 1;
  }
  for (std::size_t c = 0; c < tau.size(); ++c) {
    const auto& q = d.points.at(tau[c]);
    const std::size_t col = sigma.size() + c;
    for (std::size_t r = 0; r < dim; ++r) m[r][col] = -q[r];
    m[dim + 1][col] = 1;
  }
  m[dim][n] = 1;
  m[dim + 1][n] = 1;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row < n) {
    for (std::size_t r = row; r < n; ++r)
      if (m[r][n] != 0) return Meeting::Parallel;
    return Meeting::Degenerate;
  }
  bool all_positive = true;
  for (std::size_t r = 0; r < n; ++r) {
    const Rational x = m[r][n] / m[r][pivot_col[r]];
    if (x == 0) return Meeting::Degenerate;
    if (x < 0) all_positive = false;
  }
  return all_positive ? Meeting::Cross : Meeting::Miss;
}

std::string describe(const std::vector<std::size_t>& sigma, const std::vector<std::size_t>& tau) {
  std::string s = "degenerate face pair {";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  s += "} x {";
  for (std::size_t i = 0; i < tau.size(); ++i) s += (i ? "," : "") + std::to_string(tau[i]);
  return s + "}";
}

}  // namespace

bool intersection_parity(const std::vector<std::size_t>& sigma, const std::vector<std::size_t>& tau, const Drawing& d) {
  for (auto a : sigma)
    for (auto b : tau)
      if (a == b) throw std::invalid_argument("faces share a vertex");
  const auto m = classify(sigma, tau, d);
  if (m == Meeting::Degenerate) throw DegenerateDrawing(describe(sigma, tau));
  return m == Meeting::Cross;
}

bool intersection_parity(const TopComplex& k, std::size_t sigma, std::size_t tau, const Drawing& d) {
  return intersection_parity(k.vertices.at(sigma), k.vertices.at(tau), d);
}

void check_generic(const TopComplex& k, const Drawing& d) {
  if (d.ambient_dim != static_cast<std::size_t>(2 * k.dim) || d.points.size() != k.vertex_count)
    throw std::invalid_argument("drawing does not fit the complex");
  for (std::size_t a = 0; a < k.face_count(); ++a)
    for (std::size_t b = a + 1; b < k.face_count(); ++b) {
      if (!k.disjoint(a, b)) continue;
      const auto m = classify(k.vertices[a], k.vertices[b], d);
      if (m == Meeting::Degenerate || m == Meeting::Parallel) throw DegenerateDrawing(describe(k.vertices[a], k.vertices[b]));
    }
}

Drawing random_generic_drawing(const TopComplex& k, std::uint64_t seed, const DrawingOptions& options) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-options.box, options.box);
  Drawing d;
  d.ambient_dim = static_cast<std::size_t>(2 * k.dim);
  d.seed = seed;
  for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    d.points.assign(k.vertex_count, std::vector<std::int64_t>(d.ambient_dim));
    for (auto& p : d.points)
      for (auto& x : p) x = coord(rng);
    d.attempts = attempt;
    bool ok = true;
    for (std::size_t a = 0; a < k.face_count() && ok; ++a)
      for (std::size_t b = a + 1; b < k.face_count() && ok; ++b)
        if (k.disjoint(a, b)) {
          const auto m = classify(k.vertices[a], k.vertices[b], d);
          ok = m == Meeting::Miss || m == Meeting::Cross;
        }
    if (ok) return d;
  }
  throw DegenerateDrawing("no generic drawing found within the attempt limit");
}

Gf2Vector intersection_cocycle(const DeletedProduct& dp, const Drawing& d) {
  Gf2Vector nu = dp.empty_chain();
  const auto& k = dp.complex();
  for (auto c : dp.unordered()) {
    const auto [s, t] = dp.cell(c);
    if (intersection_parity(k, s, t, d)) {
      nu.set(c);
      nu.set(dp.swap(c));
    }
  }
  return nu;
}

bool van_kampen_number(const DeletedProduct& dp, const Gf2Vector& c, const Gf2Vector& cocycle) {
  if (c.size() != dp.cell_count() || cocycle.size() != dp.cell_count())
    throw std::invalid_argument("chain length does not match the deleted product");
  if (dp.swapped(c) != c) throw std::invalid_argument("cycle is not symmetric");
  Gf2Vector both = c;
  both &= cocycle;
  // each unordered pair is counted twice
  return (both.count() / 2) % 2 == 1;
}

bool van_kampen_number(const DeletedProduct& dp, const Gf2Vector& c, const Drawing& d) {
  if (c.size() != dp.cell_count()) throw std::invalid_argument("chain length does not match the deleted product");
  bool v = false;
  const auto& k = dp.complex();
  for (auto cell : c.support()) {
    const auto [s, t] = dp.cell(cell);
    if (s < t && intersection_parity(k, s, t, d)) v = !v;
  }
  return v;
}

}  // namespace z2e
