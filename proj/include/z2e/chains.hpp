#pragma once

// Cycle spaces over GF(2) and the constructive decompositions on them:
// rook cycles and parallelepipeds for joins, α/β relations for K_{n,n},
// the C_{ij'} basis of H_1 of the deleted bipartite graph, and chordless /
// 4-cycle splittings of graph cycles.

#include <cstddef>
#include <vector>

#include "z2e/complexes.hpp"
#include "z2e/gf2.hpp"

namespace z2e {

/// Rows are (j-1)-faces, columns j-faces, both in JoinComplex::faces order.
Gf2Matrix boundary_matrix(const JoinComplex& j, int dim);
/// Chain over faces(dim).
bool is_cycle(const JoinComplex& j, int dim, const Gf2Vector& chain);

// A top chain and its dual rook set share the bit layout: bit top_index(a)
// is the face a and the grid point a.
std::vector<Tuple> rook_points(const JoinComplex& j, const Gf2Vector& chain);
Gf2Vector chain_from_points(const JoinComplex& j, const std::vector<Tuple>& points);
/// Every coordinate line meets the set in an even number of points.
bool is_rook_cycle(const JoinComplex& j, const Gf2Vector& points);

/// The parallelepiped {n_1-1,a_1} x ... x {n_{k+1}-1,a_{k+1}} for a in the
/// smaller grid [n_1-1] x ... x [n_{k+1}-1].
Octahedron parallelepiped(const JoinComplex& j, const Tuple& a);
/// P(a) for a in C cap the smaller grid; their sum is C.
std::vector<Octahedron> rook_decomposition(const JoinComplex& j, const Gf2Vector& rook_cycle);

/// Basis {P(a)} of the top cycle space, a in lexicographic order.
std::vector<Octahedron> cycle_space_basis(const JoinComplex& j);
std::size_t cycle_space_dim(const JoinComplex& j);
/// Coordinates of a top cycle in cycle_space_basis.
Gf2Vector basis_coordinates(const JoinComplex& j, const Gf2Vector& cycle);

// ---------------------------------------------------------------- k = 1 relations

/// {a,b}x{u,v} + {a,b}x{v,w} + {a,b}x{w,u}, with a<b and u<v<w.
struct AlphaRelation {
  int a, b, u, v, w;
  auto operator<=>(const AlphaRelation&) const = default;
};
/// {a,b}x{u,v} + {b,c}x{u,v} + {c,a}x{u,v}, with a<b<c and u<v.
struct BetaRelation {
  int a, b, c, u, v;
  auto operator<=>(const BetaRelation&) const = default;
};

struct RelationExpression {
  std::vector<AlphaRelation> alphas;  // sorted, each at most once
  std::vector<BetaRelation> betas;
};

std::vector<Octahedron> relation_cycles(const AlphaRelation& r);
std::vector<Octahedron> relation_cycles(const BetaRelation& r);

/// Writes a zero-sum combination of 4-cycles of a 1-dimensional join as a
/// sum of α and β relations. Throws if the 4-cycles do not sum to zero.
RelationExpression relation_reduction_k1(const JoinComplex& j, const std::vector<Octahedron>& relation);

// ---------------------------------------------------------------- graph cycles

/// Chain over the edges of a graph.
bool is_graph_cycle(const Graph& g, const Gf2Vector& edges);

struct FundamentalCycle {
  std::size_t edge;  // the non-tree edge
  Gf2Vector cycle;
};

/// BFS spanning forest from the lowest vertex of each component; one cycle
/// per non-tree edge, in edge order.
std::vector<FundamentalCycle> fundamental_cycles(const Graph& g);
/// Coordinates of a cycle in the fundamental basis: its non-tree edges.
Gf2Vector fundamental_coordinates(const std::vector<FundamentalCycle>& basis, const Gf2Vector& cycle);

/// Vertices of a simple cycle in walk order, starting at its lowest vertex
/// and continuing to the lower of its two neighbours.
std::vector<int> cycle_vertices(const Graph& g, const Gf2Vector& simple_cycle);

/// Edge-disjoint simple cycles whose sum is c.
std::vector<Gf2Vector> simple_cycle_split(const Graph& g, const Gf2Vector& c);
/// Simple cycles without chords in g whose sum is c; splits along the
/// lowest-index chord.
std::vector<Gf2Vector> chordless_decomposition(const Graph& g, const Gf2Vector& c);

struct SimpleCycles {
  std::vector<Gf2Vector> cycles;
  bool truncated = false;  // stopped at the cap
};

/// Simple cycles of g inside the edge mask, each once: from its lowest
/// vertex, in the direction whose first step goes to the smaller neighbour.
SimpleCycles simple_cycles(const Graph& g, const Gf2Vector& mask, std::size_t cap);

struct TildeBasisCycle {
  std::size_t edge;  // the edge ij' of S; SIZE_MAX for the single n = 3 cycle
  Gf2Vector cycle;   // over DeletedGraph edges
};

/// C_{ij'} = 1 2' 3 1' i j' for ij' in S = {ij' : i,j >= 2, i != j,
/// (i,j) != (3,2)} (1-based labels), in edge order. For n = 3 the single
/// cycle K̃_3.
std::vector<TildeBasisCycle> h1_basis_tilde(const DeletedGraph& d);
/// Coordinates of a cycle of K̃_n in h1_basis_tilde: its edges in S.
Gf2Vector tilde_coordinates(const DeletedGraph& d, const std::vector<TildeBasisCycle>& basis, const Gf2Vector& cycle);

/// 4-cycles of K̃_n (n >= 4) whose sum is c.
std::vector<Gf2Vector> four_cycle_decomposition(const DeletedGraph& d, const Gf2Vector& c);

}  // namespace z2e
