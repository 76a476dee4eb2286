#ifndef IMSETS_TRIANGULATE_HPP
#define IMSETS_TRIANGULATE_HPP

#include <cstddef>
#include <vector>

#include "imsets/graph.hpp"
#include "imsets/mpd.hpp"

namespace imsets {

/// Size limits for triangulation enumeration.
struct Guards {
  /// Largest graph handed to the per-component enumerator.
  int max_component_vertices = 12;
  /// Most minimal triangulations allowed for one mp-component.
  std::size_t max_per_component = 10'000;
  /// Most minimal triangulations allowed for a whole graph (the product over
  /// mp-components).
  std::size_t max_product = 1'000'000;
};

/// Edges of `h2` that are not edges of `h`, sorted.
std::vector<Edge> fill_edges(const MixedGraph& h, const MixedGraph& h2);

/// Ohtsuki criterion: for every fill edge u-v of h2 over h, no minimal
/// (u,v)-separator of h is a clique in h2. Throws InvalidArgument if h2 is
/// not chordal or does not contain h.
bool is_minimal_triangulation(const MixedGraph& h, const MixedGraph& h2);

/// All minimal triangulations of g, by dynamic programming over elimination
/// sets. Works for any undirected graph up to `max_component_vertices`;
/// intended for prime graphs.
std::vector<MixedGraph> minimal_triangulations_prime(const MixedGraph& g, const Guards& guards = {});

/// Minimal triangulations of each mp-component's induced subgraph, in the
/// order of `d.components`.
std::vector<std::vector<MixedGraph>> component_triangulations(const MixedGraph& g, const MpDecomposition& d,
                                                              const Guards& guards = {});

/// All minimal triangulations of g, assembled per mp-component.
std::vector<MixedGraph> minimal_triangulations(const MixedGraph& g, const Guards& guards = {});

/// Number of minimal triangulations without materializing the product.
std::size_t count_minimal_triangulations(const MixedGraph& g, const Guards& guards = {});

/// Moral graph of the subgraph induced by c and its parents. c must be a chain
/// component of g.
MixedGraph closure_graph(const MixedGraph& g, VertexSet c);

/// Closure-graph conditions for one chain component.
struct ComponentDiagnosis {
  VertexSet component;
  bool closure_chordal = true;
  /// The induced subgraph on the component is chordal.
  bool induced_chordal = true;
  /// Children of each parent that are non-adjacent are separated by the
  /// parent's remaining children.
  bool children_separated = true;
  /// Private children of two distinct parents are non-adjacent and separated
  /// by the union of both parents' children.
  bool distinct_parents_separated = true;
};

struct DagEquivalence {
  bool equivalent = true;
  std::vector<ComponentDiagnosis> components;
};

/// Whether g is equivalent to some DAG: every closure graph is chordal.
DagEquivalence diagnose_dag_equivalence(const MixedGraph& g);
bool is_dag_equivalent(const MixedGraph& g);

/// Minimal triangulations of a chain graph: each closure graph is triangulated
/// and the fill edges are mapped back (undirected within a chain component,
/// directed from the earlier component otherwise).
std::vector<MixedGraph> cg_minimal_triangulations(const MixedGraph& g, const Guards& guards = {});

}  // namespace imsets

#endif  // IMSETS_TRIANGULATE_HPP
