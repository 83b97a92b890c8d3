#pragma once

// Combinatorial deleted products K x K minus the diagonal: their 2k-cycles,
// the symmetric ones, and the generators built from octahedron pairs,
// [3]-subcomplexes and Kuratowski subgraphs.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "z2e/chains.hpp"
#include "z2e/complexes.hpp"
#include "z2e/gf2.hpp"

namespace z2e {

/// Ordered pairs (σ,τ) of vertex-disjoint top faces. A chain on the deleted
/// product is a Gf2Vector over cells(); a symmetric one is swap-invariant.
class DeletedProduct {
 public:
  explicit DeletedProduct(TopComplex complex);

  const TopComplex& complex() const { return complex_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& cells() const { return cells_; }
  std::pair<std::size_t, std::size_t> cell(std::size_t c) const { return cells_[c]; }
  /// Cell index of (σ,τ), or nullopt when the faces meet.
  std::optional<std::size_t> cell_index(std::size_t sigma, std::size_t tau) const;
  std::size_t swap(std::size_t c) const { return swap_[c]; }
  /// Cells with σ < τ, one per unordered pair.
  const std::vector<std::size_t>& unordered() const { return unordered_; }

  Gf2Vector empty_chain() const { return Gf2Vector(cells_.size()); }
  Gf2Vector swapped(const Gf2Vector& chain) const;

 private:
  TopComplex complex_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::size_t> lookup_;  // sigma * faces + tau -> cell or npos
  std::vector<std::size_t> swap_;
  std::vector<std::size_t> unordered_;
};

/// The cellular cycle condition on both factors.
bool is_cycle(const DeletedProduct& dp, const Gf2Vector& chain);
bool is_symmetric_cycle(const DeletedProduct& dp, const Gf2Vector& chain);

struct CycleSpace {
  std::vector<Gf2Vector> basis;            // all 2k-cycles
  std::vector<Gf2Vector> symmetric_basis;  // swap-invariant 2k-cycles
};

/// Bases from the nullity of the boundary operator.
CycleSpace cycle_space(const DeletedProduct& dp);

struct CycleDims {
  std::size_t full = 0;
  std::size_t symmetric = 0;
};

CycleDims cycle_space_dims(const DeletedProduct& dp);
CycleDims cycle_space_dims(const JoinComplex& j);

/// P x Q + Q x P for top chains P, Q with every face of P disjoint from
/// every face of Q.
Gf2Vector symmetrized_torus(const DeletedProduct& dp, const Gf2Vector& p, const Gf2Vector& q);
Gf2Vector symmetrized_torus(const JoinComplex& j, const DeletedProduct& dp, const Octahedron& p, const Octahedron& q);
/// All cells with both faces in X.
Gf2Vector triple_deleted_product(const JoinComplex& j, const DeletedProduct& dp, const TripleSubcomplex& x);
/// Triple subcomplex on {0,1,2} in every coordinate.
TripleSubcomplex standard_triple(const JoinComplex& j);

// ---------------------------------------------------------------- tensor coordinates

/// Coordinates of 2k-cycles of ([n_1]*...*[n_{k+1}]) x-minus-diagonal in the
/// product basis of H_1(K̃_{n_1}) (x) ... (x) H_1(K̃_{n_{k+1}}) built from
/// h1_basis_tilde. The cell (α,β) corresponds to the product of the edges
/// α_i β_i' of K̃_{n_i}.
class TensorIso {
 public:
  TensorIso(const JoinComplex& j, const DeletedProduct& dp);

  std::size_t dim() const { return dim_; }
  const std::vector<DeletedGraph>& factors() const { return factors_; }
  const std::vector<std::vector<TildeBasisCycle>>& bases() const { return bases_; }
  /// t_i on the basis of factor i (columns are images).
  const std::vector<Gf2Matrix>& factor_swaps() const { return t_; }
  /// T = t_1 (x) ... (x) t_{k+1}.
  const Gf2Matrix& swap_matrix() const { return big_t_; }

  /// Throws std::invalid_argument on non-cycles.
  Gf2Vector to_tensor(const Gf2Vector& cycle) const;
  Gf2Vector from_tensor(const Gf2Vector& coords) const;
  /// Cells of the product of the given edge sets (one per factor).
  Gf2Vector product_cells(const std::vector<Gf2Vector>& factor_edges) const;
  /// Multi-index of a product basis element.
  std::vector<std::size_t> split_index(std::size_t idx) const;
  /// K̃_3 (on {0,1,2}) in every factor.
  Gf2Vector k3_tensor() const;

 private:
  const JoinComplex& join_;
  const DeletedProduct& dp_;
  std::vector<DeletedGraph> factors_;
  std::vector<std::vector<TildeBasisCycle>> bases_;
  std::vector<std::vector<std::size_t>> rep_edges_;  // edge read off per basis element
  std::vector<Gf2Matrix> t_;
  Gf2Matrix big_t_;
  std::size_t dim_ = 1;
};

struct KerImReport {
  std::size_t dim = 0;
  std::size_t ker = 0;
  std::size_t im = 0;
  bool k3_in_image = false;
  /// ker == im + 1 and K̃_3-tensor outside the image
  bool holds() const { return ker == im + 1 && !k3_in_image; }
};

/// Ker/Im of I + T on H_1(K̃_{n_1}) (x) ... (x) H_1(K̃_{n_l}), computed in
/// fundamental-cycle bases of the K̃_{n_i}.
KerImReport ker_im_check(const std::vector<int>& sizes);

struct TorusGenerator {
  Octahedron p, q;
  auto operator<=>(const TorusGenerator&) const = default;
};

/// For joins mixing coordinates of size 3 with larger ones. p and q hold one
/// pair per coordinate of size > 3 (in coordinate order); the cycle is all
/// cells whose faces differ in every size-3 coordinate and lie in P x Q or
/// Q x P on the others.
struct MixedTorus {
  Octahedron p, q;
  auto operator<=>(const MixedTorus&) const = default;
};

Gf2Vector mixed_torus(const JoinComplex& j, const DeletedProduct& dp, const MixedTorus& m);

struct GeneratorDecomposition {
  std::vector<TorusGenerator> tori;
  std::vector<TripleSubcomplex> triples;
  std::vector<MixedTorus> mixed;  // empty unless sizes mix 3 with larger
};

/// Writes a symmetric cycle as a sum of symmetrized tori of vertex-disjoint
/// octahedra and triple deleted products (plus mixed tori when some but not
/// all sizes are 3). The sum is verified.
GeneratorDecomposition generator_decomposition(const JoinComplex& j, const DeletedProduct& dp, const Gf2Vector& c);
Gf2Vector generator_sum(const JoinComplex& j, const DeletedProduct& dp, const GeneratorDecomposition& g);

// ---------------------------------------------------------------- graphs

struct SymTorus {
  Gf2Vector p, q;  // edge sets of two vertex-disjoint cycles
};
struct EconomicDP {
  HomeoType type = HomeoType::Other;
  Gf2Vector subgraph;  // edge set of a K5 or K33 subdivision
};
using GraphGenerator = std::variant<SymTorus, EconomicDP>;

/// Pairs of edges whose branches in the subdivision are disjoint. `subgraph`
/// is an edge mask of the graph underlying dp.
Gf2Vector economic_deleted_product(const Graph& g, const DeletedProduct& dp, const Gf2Vector& subgraph);
Gf2Vector graph_generator_cycle(const Graph& g, const DeletedProduct& dp, const GraphGenerator& gen);

/// Symmetric 2-cycles of the deleted product supported inside `support`.
std::vector<Gf2Vector> symmetric_cycles_within(const DeletedProduct& dp, const Gf2Vector& support);

/// Splits a symmetric 2-cycle into minimal symmetric pieces and classifies
/// each as a symmetrized torus or an economic deleted product.
std::vector<GraphGenerator> graph_symmetric_decomposition(const Graph& g, const DeletedProduct& dp, const Gf2Vector& c);

/// Raised when a computation contradicts an invariant that must hold.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace z2e
