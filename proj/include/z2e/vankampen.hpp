#pragma once

// Straight-simplex drawings of a k-complex in R^{2k}, intersection parities of
// vertex-disjoint top faces, and van Kampen numbers of symmetric cycles.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "z2e/complexes.hpp"
#include "z2e/delprod.hpp"
#include "z2e/gf2.hpp"

namespace z2e {

/// A drawing that is not in general position for some disjoint face pair.
class DegenerateDrawing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Drawing {
  std::size_t ambient_dim = 0;                     // 2k
  std::vector<std::vector<std::int64_t>> points;   // per vertex
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
};

struct DrawingOptions {
  std::int64_t box = 1'000'000;  // coordinates in [-box, box]
  std::size_t max_attempts = 100;
};

/// Parity of the intersection of the straight simplices on the given vertex
/// lists (k+1 vertices each in R^{2k}). Throws DegenerateDrawing on a
/// boundary touch or a positive-dimensional intersection.
bool intersection_parity(const std::vector<std::size_t>& sigma, const std::vector<std::size_t>& tau, const Drawing& d);
bool intersection_parity(const TopComplex& k, std::size_t sigma, std::size_t tau, const Drawing& d);

/// Throws DegenerateDrawing unless every disjoint face pair has a regular
/// barycentric system with no zero coefficient.
void check_generic(const TopComplex& k, const Drawing& d);

/// Integer points sampled from the seed; resampled until generic. Throws
/// DegenerateDrawing when the attempts run out.
Drawing random_generic_drawing(const TopComplex& k, std::uint64_t seed, const DrawingOptions& options = {});

/// nu(f) on the cells of dp (symmetric: both orders carry the same bit).
Gf2Vector intersection_cocycle(const DeletedProduct& dp, const Drawing& d);

/// Sum of nu(f) over the unordered pairs of a symmetric cycle.
bool van_kampen_number(const DeletedProduct& dp, const Gf2Vector& c, const Gf2Vector& cocycle);
bool van_kampen_number(const DeletedProduct& dp, const Gf2Vector& c, const Drawing& d);

}  // namespace z2e
