#pragma once

// The independent / additive / non-trivial conditions on symmetric matrices
// indexed by generating cycles, in three flavors: joins (octahedra), complete
// graphs (triangles) and arbitrary graphs (simple cycles). A flavor records
// each generator by its coordinates in a homology basis; a BForm is a
// symmetric matrix on that basis and expands to the generator-indexed matrix.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2e/chains.hpp"
#include "z2e/complexes.hpp"
#include "z2e/gf2.hpp"

namespace z2e {

enum class FlavorKind { Join, CompleteGraph, Graph };
const char* to_string(FlavorKind k);

using GeneratorPair = std::pair<std::size_t, std::size_t>;

/// A subobject that must be non-trivial (a [3]-subcomplex, a 5-subset, a
/// Kuratowski subgraph), with its complementary pairs per witness (face,
/// vertex or edge).
struct Subobject {
  std::string label;
  std::vector<std::string> witness_labels;
  std::vector<std::vector<GeneratorPair>> witnesses;
};

struct Flavor {
  FlavorKind kind = FlavorKind::Join;
  std::string descriptor;
  std::optional<JoinComplex> join;
  std::optional<Graph> graph;
  TopComplex complex;

  std::size_t basis_size = 0;
  std::vector<Gf2Vector> basis_chains;           // top chains of the basis cycles
  std::vector<std::string> generator_labels;
  std::vector<Gf2Vector> generators;             // basis coordinates
  std::vector<std::size_t> basis_generators;     // generator index of each basis cycle
  std::vector<GeneratorPair> disjoint_pairs;     // i < j
  std::vector<std::vector<std::size_t>> relations;  // generator sets summing to zero
  std::vector<Subobject> subobjects;
  bool truncated = false;  // a graph enumeration hit its limit

  std::size_t generator_count() const { return generators.size(); }
};

Flavor join_flavor(const JoinComplex& j);
/// K_n with triangles as generators; basis = triangles through vertex 0.
Flavor complete_graph_flavor(int n);

struct GraphFlavorLimits {
  std::size_t max_cycles = 20'000;
  KuratowskiLimits kuratowski;
};

/// Generators: the fundamental cycles, then every other simple cycle used by
/// a disjoint pair or a Kuratowski subgraph.
Flavor graph_flavor(const Graph& g, const GraphFlavorLimits& limits = {});

// ---------------------------------------------------------------- BForm coordinates

/// Upper-triangle entries (i <= j) of an h x h symmetric matrix, row by row.
std::size_t form_variable_count(std::size_t h);
std::size_t form_variable(std::size_t i, std::size_t j, std::size_t h);
Gf2Vector form_to_variables(const Gf2Matrix& b);
Gf2Matrix form_from_variables(const Gf2Vector& vars, std::size_t h);
/// The linear functional B -> u^T B v on form variables.
Gf2Vector pairing_functional(const Gf2Vector& u, const Gf2Vector& v);
bool pairing(const Gf2Matrix& b, const Gf2Vector& u, const Gf2Vector& v);

/// The three conditions on a BForm as linear functionals on its variables.
struct LinearConditions {
  std::size_t h = 0;
  std::vector<Gf2Vector> independence;                // each must vanish
  std::vector<std::vector<Gf2Vector>> nontriviality;  // [subobject][witness], each must be 1
};

LinearConditions linear_conditions(const Flavor& f);

// ---------------------------------------------------------------- generator-indexed matrices

struct CheckResult {
  bool ok = true;
  std::vector<std::vector<std::size_t>> violations;  // sorted index tuples
};

/// A_{P,Q} = 0 for disjoint generators; violations (P, Q).
CheckResult is_independent(const Flavor& f, const Gf2Matrix& a);
/// Every relation sums to zero against every column; violations (relation, Q).
CheckResult is_additive(const Flavor& f, const Gf2Matrix& a);
/// Sum of A over the complementary pairs of witness e of subobject x.
bool s_sum(const Flavor& f, const Gf2Matrix& a, std::size_t x, std::size_t e);

enum class NontrivialMode { OneWitness, All };
/// violations (subobject, witness); one_witness checks witness 0 only.
CheckResult is_nontrivial(const Flavor& f, const Gf2Matrix& a, NontrivialMode mode);

Gf2Matrix bform_expand(const Flavor& f, const Gf2Matrix& b);
/// Restriction to the basis generators. Throws std::invalid_argument when A
/// is not additive.
Gf2Matrix oct_compress(const Flavor& f, const Gf2Matrix& a);

// ---------------------------------------------------------------- graph criterion

struct GraphCriterionReport {
  bool independence = true;
  bool k5_nontriviality = true;
  bool k33_nontriviality = true;
  bool inconclusive = false;  // enumeration truncated
  std::vector<std::vector<std::size_t>> violations;

  bool holds() const { return independence && k5_nontriviality && k33_nontriviality && !inconclusive; }
};

/// y: beta x (fundamental cycle count) matrix of H_1(K) -> H_1(N); omega the
/// intersection form of N.
GraphCriterionReport graph_criterion_check(const Graph& g, const Gf2Matrix& y, const Gf2Matrix& omega,
                                           const GraphFlavorLimits& limits = {});

}  // namespace z2e
