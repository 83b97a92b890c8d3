#pragma once

// Homomorphisms H_k(K) -> H from generator values, their lifts to maps on top
// faces, the quadratic quantity y^2(C) and the homological criterion (R')
// checked on a spanning set of symmetric cycles.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2e/conditions.hpp"
#include "z2e/delprod.hpp"
#include "z2e/gf2.hpp"

namespace z2e {

/// psi on the span of its basis cycles: column j of `values` is psi(basis j).
struct HomMatrix {
  std::vector<Gf2Vector> basis_chains;
  Gf2Matrix values;  // beta x basis size

  std::size_t beta() const { return values.rows(); }
  /// Throws std::invalid_argument when the cycle is outside the span.
  Gf2Vector apply(const Gf2Vector& cycle) const;
};

/// Some zero combination of generators has a value sum that pairs nontrivially
/// with a generator value.
class HypothesisViolation : public std::invalid_argument {
 public:
  HypothesisViolation(std::vector<std::size_t> relation, std::size_t partner);
  std::vector<std::size_t> relation;  // generator indices summing to zero
  std::size_t partner;
};

/// Values are vectors of length beta; pairings use omega. The result
/// preserves every pairing between generator values (checked).
HomMatrix hom_from_generators(const std::vector<Gf2Vector>& generators, const std::vector<Gf2Vector>& values,
                              const Gf2Matrix& omega);

/// A map from top faces to GF(2)^beta, one column per face.
struct FaceMap {
  Gf2Matrix y;
  Gf2Vector hat(const Gf2Vector& chain) const { return y * chain; }
};

/// Some y with hat(y) = psi on all of psi's basis.
FaceMap face_map_from_hom(const HomMatrix& psi, std::size_t face_count);

/// Sum over unordered pairs {s,t} of C of y(s) . y(t).
bool y_squared(const DeletedProduct& dp, const Gf2Vector& c, const FaceMap& y, const Gf2Matrix& omega);

/// The symmetric cycles on which (R') is checked, with their van Kampen
/// numbers from drawings with the given seeds (which must agree).
struct RPrimeContext {
  DeletedProduct dp;
  std::vector<Gf2Vector> cycles;
  std::vector<std::string> labels;
  std::vector<bool> v;
  std::vector<std::uint64_t> seeds;
};

/// Joins: symmetrized tori of disjoint octahedra and triple deleted products
/// (a symmetric cycle basis when sizes mix 3 with larger ones). Graphs and
/// complete graphs: a symmetric cycle basis.
RPrimeContext r_prime_context(const Flavor& f, const std::vector<std::uint64_t>& seeds = {1, 2, 3});

struct RPrimeEntry {
  std::size_t generator = 0;
  bool v = false;
  bool y2 = false;
  bool ok() const { return v == y2; }
};

struct RPrimeVerdict {
  bool ok = true;
  std::vector<RPrimeEntry> entries;
  std::vector<std::size_t> failing;
};

RPrimeVerdict check_R_prime(const RPrimeContext& ctx, const FaceMap& y, const Gf2Matrix& omega);

/// Top chain of generator i of a flavor.
Gf2Vector generator_chain(const Flavor& f, std::size_t i);

/// Face map whose pairing on generators is Y^T Omega Y. Y has one column per
/// generator of f. Throws HypothesisViolation when Y^T Omega Y is not additive.
FaceMap face_map_from_values(const Flavor& f, const Gf2Matrix& y, const Gf2Matrix& omega);

}  // namespace z2e
