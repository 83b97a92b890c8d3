#pragma once

// Joins of finite sets, their octahedra and [3]-subcomplexes, and simple
// graphs with the Kuratowski-type structure used by the criteria.
//
// Vertex labels are 0-based throughout. A top face of the join
// [n_1]*...*[n_{k+1}] is a tuple (a_1,...,a_{k+1}) with a_i in [n_i]; it is
// also the grid point of [n_1]x...x[n_{k+1}] dual to it.

#include <array>
#include <compare>
#include <iosfwd>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "z2e/gf2.hpp"

namespace z2e {

using Tuple = std::vector<int>;
inline constexpr int kBlank = -1;

std::size_t binomial(std::size_t n, std::size_t k);
/// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);
/// Lexicographic index of the 2-subset {a,b} of [n], a < b.
std::size_t pair_index(int a, int b, int n);
std::pair<int, int> pair_at(std::size_t index, int n);

struct Octahedron {
  std::vector<std::array<int, 2>> pairs;  // one 2-subset per join coordinate, sorted
  auto operator<=>(const Octahedron&) const = default;
};

struct TripleSubcomplex {
  std::vector<std::array<int, 3>> triples;
  auto operator<=>(const TripleSubcomplex&) const = default;
};

class JoinComplex {
 public:
  /// Every size must be at least 3.
  explicit JoinComplex(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int dim() const { return static_cast<int>(sizes_.size()) - 1; }
  std::string descriptor() const;

  std::size_t vertex_count() const;
  /// Global id of vertex a in join coordinate i.
  std::size_t vertex_id(int coord, int a) const;

  std::size_t top_face_count() const;
  std::size_t top_index(const Tuple& face) const;
  Tuple top_face(std::size_t index) const;

  /// Faces of dimension j are tuples with exactly j+1 non-blank entries,
  /// ordered lexicographically with blank before 0.
  std::size_t face_count(int j) const;
  std::vector<Tuple> faces(int j) const;
  std::size_t face_index(const Tuple& face) const;

  std::size_t octahedron_count() const;
  std::vector<Octahedron> octahedra() const;
  std::size_t octahedron_index(const Octahedron& p) const;
  Octahedron octahedron_at(std::size_t index) const;
  /// Indices of the 2^{k+1} top faces, ascending.
  std::vector<std::size_t> top_faces(const Octahedron& p) const;
  Gf2Vector chain(const Octahedron& p) const;

  std::size_t triple_count() const;
  std::vector<TripleSubcomplex> triple_subcomplexes() const;
  std::vector<std::size_t> top_faces(const TripleSubcomplex& x) const;

  /// Vertex-disjoint top faces differ in every coordinate.
  static bool faces_disjoint(const Tuple& a, const Tuple& b);

 private:
  std::vector<int> sizes_;
};

bool vertex_disjoint(const Octahedron& p, const Octahedron& q);

/// The 2^k unordered pairs of octahedra inside x meeting exactly in face e.
/// Each pair is oriented so that the first octahedron holds the smaller
/// remaining element in coordinate 0.
std::vector<std::pair<Octahedron, Octahedron>> complementary_pairs(const TripleSubcomplex& x, const Tuple& e);

struct CompleteGraphStructures {
  std::vector<std::vector<int>> triples;
  std::vector<std::vector<int>> quads;
  std::vector<std::vector<int>> quints;
};

CompleteGraphStructures kn_structures(int n);
/// The 3 pairs {P,Q} of 3-subsets of the 5-set f with P cap Q = {v}.
std::vector<std::pair<std::vector<int>, std::vector<int>>> kn_complementary_pairs(const std::vector<int>& f, int v);

// ---------------------------------------------------------------- graphs

class Graph {
 public:
  Graph() = default;
  /// Edges are normalized to (min,max); loops and repeated edges are rejected.
  Graph(std::size_t vertices, std::vector<std::pair<int, int>> edges);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(std::size_t e) const { return edges_[e]; }
  /// Edge index of {u,v}, or edge_count() when absent.
  std::size_t edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) != edge_count(); }
  /// Incident edge indices per vertex.
  const std::vector<std::vector<std::size_t>>& incidence() const { return incidence_; }
  std::size_t degree(int v) const { return incidence_[static_cast<std::size_t>(v)].size(); }
  int other_end(std::size_t e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }

  /// Subgraph on the same vertex set keeping the edges in mask.
  Graph subgraph(const Gf2Vector& mask) const;

 private:
  std::size_t vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::vector<int>> adjacency_;  // dense lookup: adjacency_[u][v] = edge index or -1
};

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
/// Rim cycle on vertices 0..rim-1, hub rim.
Graph wheel_graph(int rim);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Replaces edge e by a path through one new vertex.
Graph subdivide(const Graph& g, std::size_t e);

/// Text format: "V E", then E lines "u v"; '#' starts a comment.
Graph read_graph(std::istream& in);

struct DeletedGraph {
  int n = 0;
  Graph graph;                           // vertex j is j, vertex j' is n + j
  std::vector<std::size_t> vertex_swap;  // j <-> j'
  std::vector<std::size_t> edge_swap;    // ij' <-> ji'
  std::size_t edge_of(int i, int j) const { return graph.edge_index(i, n + j); }
};

/// K_{n,n} without the diagonal edges jj', with its part-switching involution.
DeletedGraph deleted_graph(int n);

enum class HomeoType { K5, K33, DisjointCyclePair, Wheel, Other };
const char* to_string(HomeoType t);

HomeoType homeomorphism_type(const Graph& g);

/// Branches of a graph: maximal paths whose interior vertices have degree 2.
/// Only meaningful when every non-isolated vertex has degree >= 2 and some
/// vertex has degree >= 3.
struct BranchStructure {
  std::vector<int> branch_vertices;             // degree >= 3, ascending
  std::vector<std::size_t> edge_branch;         // per edge; SIZE_MAX for edges outside
  std::vector<std::pair<int, int>> endpoints;   // per branch, ascending pair
  std::vector<std::vector<std::size_t>> edges;  // per branch
};

BranchStructure branch_structure(const Graph& g);

struct KuratowskiSubgraph {
  HomeoType type = HomeoType::Other;
  Gf2Vector edges;
  // K5: 5 branch vertices. K33: parts {b0,b1,b2} and {b3,b4,b5}.
  std::vector<int> branch_vertices;
  // one edge set per branch edge; K5 in lexicographic pair order, K33 as
  // (part-A index) * 3 + (part-B index)
  std::vector<Gf2Vector> branch_paths;
};

struct KuratowskiLimits {
  std::size_t max_branch_choices = 1'000'000;
  std::size_t max_subgraphs = 100'000;
};

struct KuratowskiResult {
  std::vector<KuratowskiSubgraph> subgraphs;
  bool truncated = false;
};

/// Enumerates subgraphs homeomorphic to K5 or K33 by choosing branch
/// vertices and internally disjoint connecting paths.
KuratowskiResult kuratowski_subgraphs(const Graph& g, const KuratowskiLimits& limits = {});

// ---------------------------------------------------------------- top faces

/// A pure k-complex seen through its top faces: enough structure for deleted
/// products, boundaries of top chains and straight-line drawings.
struct TopComplex {
  int dim = 0;
  std::size_t vertex_count = 0;
  std::size_t subface_count = 0;                   // (k-1)-faces
  std::vector<std::vector<std::size_t>> vertices;  // per top face, ascending
  std::vector<std::vector<std::size_t>> boundary;  // per top face, (k-1)-face ids

  std::size_t face_count() const { return vertices.size(); }
  bool disjoint(std::size_t a, std::size_t b) const;
  /// Boundary matrix from top chains to (k-1)-chains.
  Gf2Matrix boundary_matrix() const;
};

TopComplex top_complex(const JoinComplex& j);
TopComplex top_complex(const Graph& g);

}  // namespace z2e
