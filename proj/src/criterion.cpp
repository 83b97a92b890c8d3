#include "z2e/criterion.hpp"

#include <algorithm>

#include "z2e/vankampen.hpp"

namespace z2e {

Gf2Vector HomMatrix::apply(const Gf2Vector& cycle) const {
  SpanBuilder span(cycle.size());
  for (const auto& b : basis_chains) span.add(b);
  const auto coords = span.express(cycle);
  if (!coords) throw std::invalid_argument("cycle outside the domain of the homomorphism");
  return values * *coords;
}

HypothesisViolation::HypothesisViolation(std::vector<std::size_t> rel, std::size_t p)
    : std::invalid_argument("generator values violate the homomorphism hypothesis"), relation(std::move(rel)), partner(p) {}

HomMatrix hom_from_generators(const std::vector<Gf2Vector>& generators, const std::vector<Gf2Vector>& values,
                              const Gf2Matrix& omega) {
  if (generators.size() != values.size()) throw std::invalid_argument("one value per generator");
  const std::size_t beta = omega.rows();
  for (const auto& v : values)
    if (v.size() != beta) throw std::invalid_argument("value length differs from beta");
  const std::size_t len = generators.empty() ? 0 : generators[0].size();

  SpanBuilder span(len);
  std::vector<std::size_t> accepted;
  std::vector<std::size_t> redundant;
  for (std::size_t a = 0; a < generators.size(); ++a) {
    if (generators[a].size() != len) throw std::invalid_argument("generators differ in length");
    (span.add(generators[a]) ? accepted : redundant).push_back(a);
  }

  // kernel basis of the relation space: each redundant generator with its expression
  for (auto a : redundant) {
    const auto coords = *span.express(generators[a]);
    std::vector<std::size_t> rel{a};
    Gf2Vector sum = values[a];
    for (auto j : coords.support()) {
      rel.push_back(accepted[j]);
      sum ^= values[accepted[j]];
    }
    const auto w = omega * sum;
    for (std::size_t b = 0; b < values.size(); ++b)
      if (w.dot(values[b])) {
        std::sort(rel.begin(), rel.end());
        throw HypothesisViolation(rel, b);
      }
  }

  HomMatrix psi;
  psi.values = Gf2Matrix(beta, accepted.size());
  for (std::size_t j = 0; j < accepted.size(); ++j) {
    psi.basis_chains.push_back(generators[accepted[j]]);
    psi.values.set_col(j, values[accepted[j]]);
  }

  std::vector<Gf2Vector> images;
  for (const auto& g : generators) images.push_back(psi.values * *span.express(g));
  for (std::size_t a = 0; a < generators.size(); ++a) {
    const auto wa = omega * images[a];
    const auto va = omega * values[a];
    for (std::size_t b = a; b < generators.size(); ++b)
      if (wa.dot(images[b]) != va.dot(values[b])) throw ConsistencyError("homomorphism does not preserve pairings");
  }
  return psi;
}

FaceMap face_map_from_hom(const HomMatrix& psi, std::size_t face_count) {
  FaceMap out{Gf2Matrix(psi.beta(), face_count)};
  if (psi.basis_chains.empty()) return out;
  const auto m = Gf2Matrix::from_rows(psi.basis_chains, face_count);
  for (std::size_t r = 0; r < psi.beta(); ++r) {
    const auto sol = solve_affine(m, psi.values.row(r));
    if (!sol) throw ConsistencyError("face map system is inconsistent");
    out.y.set_row(r, sol->particular);
  }
  return out;
}

bool y_squared(const DeletedProduct& dp, const Gf2Vector& c, const FaceMap& y, const Gf2Matrix& omega) {
  if (c.size() != dp.cell_count()) throw std::invalid_argument("chain length does not match the deleted product");
  const auto w = omega * y.y;
  bool sum = false;
  for (auto cell : c.support()) {
    const auto [s, t] = dp.cell(cell);
    if (s > t) continue;
    for (std::size_t r = 0; r < y.y.rows(); ++r)
      if (y.y.get(r, s) && w.get(r, t)) sum = !sum;
  }
  return sum;
}

RPrimeContext r_prime_context(const Flavor& f, const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("at least one drawing seed is needed");
  RPrimeContext ctx{DeletedProduct(f.complex), {}, {}, {}, seeds};
  const auto& dp = ctx.dp;

  bool use_basis = f.kind != FlavorKind::Join;
  if (f.join) {
    const auto& sizes = f.join->sizes();
    const bool has_three = std::find(sizes.begin(), sizes.end(), 3) != sizes.end();
    const bool equal = std::all_of(sizes.begin(), sizes.end(), [&](int n) { return n == sizes[0]; });
    use_basis = has_three && !equal;
  }
  if (use_basis) {
    const auto basis = cycle_space(dp).symmetric_basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ctx.cycles.push_back(basis[i]);
      ctx.labels.push_back("symmetric-basis-" + std::to_string(i));
    }
  } else {
    const auto& j = *f.join;
    const auto octs = j.octahedra();
    for (std::size_t a = 0; a < octs.size(); ++a)
      for (std::size_t b = a + 1; b < octs.size(); ++b)
        if (vertex_disjoint(octs[a], octs[b])) {
          ctx.cycles.push_back(symmetrized_torus(j, dp, octs[a], octs[b]));
          ctx.labels.push_back("torus-" + std::to_string(a) + "-" + std::to_string(b));
        }
    const auto xs = j.triple_subcomplexes();
    for (std::size_t x = 0; x < xs.size(); ++x) {
      ctx.cycles.push_back(triple_deleted_product(j, dp, xs[x]));
      ctx.labels.push_back("triple-" + std::to_string(x));
    }
  }

  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const auto nu = intersection_cocycle(dp, random_generic_drawing(dp.complex(), seeds[s]));
    for (std::size_t i = 0; i < ctx.cycles.size(); ++i) {
      const bool v = van_kampen_number(dp, ctx.cycles[i], nu);
      if (s == 0)
        ctx.v.push_back(v);
      else if (ctx.v[i] != v)
        throw ConsistencyError("van Kampen number depends on the drawing for " + ctx.labels[i]);
    }
  }
  return ctx;
}

RPrimeVerdict check_R_prime(const RPrimeContext& ctx, const FaceMap& y, const Gf2Matrix& omega) {
  if (y.y.cols() != ctx.dp.complex().face_count() || y.y.rows() != omega.rows())
    throw std::invalid_argument("face map does not fit the complex or omega");
  RPrimeVerdict out;
  for (std::size_t i = 0; i < ctx.cycles.size(); ++i) {
    RPrimeEntry e{i, ctx.v[i], y_squared(ctx.dp, ctx.cycles[i], y, omega)};
    if (!e.ok()) {
      out.ok = false;
      out.failing.push_back(i);
    }
    out.entries.push_back(e);
  }
  return out;
}

Gf2Vector generator_chain(const Flavor& f, std::size_t i) {
  Gf2Vector out(f.complex.face_count());
  for (auto b : f.generators.at(i).support()) out ^= f.basis_chains[b];
  return out;
}

FaceMap face_map_from_values(const Flavor& f, const Gf2Matrix& y, const Gf2Matrix& omega) {
  if (y.cols() != f.generator_count() || y.rows() != omega.rows())
    throw std::invalid_argument("Y must have one column per generator and beta rows");
  std::vector<Gf2Vector> chains, values;
  for (std::size_t i = 0; i < f.generator_count(); ++i) {
    chains.push_back(generator_chain(f, i));
    values.push_back(y.col(i));
  }
  return face_map_from_hom(hom_from_generators(chains, values, omega), f.complex.face_count());
}

}  // namespace z2e
