#ifndef IMSETS_STANDARD_HPP
#define IMSETS_STANDARD_HPP

#include <optional>
#include <string>

#include "imsets/graph.hpp"
#include "imsets/imset.hpp"
#include "imsets/mpd.hpp"
#include "imsets/triangulate.hpp"

namespace imsets {

/// d(N) - d(empty) + sum over i of { d(pa(i)) - d(i u pa(i)) }. Requires a DAG.
Imset standard_imset_dag(const MixedGraph& g);

/// d(V) - sum over maximal cliques d(K) + sum over separators nu(S) d(S), with
/// V the graph's vertex set. Requires a chordal undirected graph.
Imset standard_imset_decomposable(const MixedGraph& g);
Imset standard_imset_decomposable(const MixedGraph& g, const MpDecomposition& d);

/// Sum of the decomposable standard imsets of every minimal triangulation.
Imset v_imset_ug(const MixedGraph& g, const Guards& guards = {});

/// Standard imset of an undirected graph, built per mp-component:
/// d(V) - sum d(V_i) + sum nu(S) d(S) + sum_i sum over triangulations G of
/// g[V_i] of u_G. Never materializes the product of triangulations.
Imset standard_imset_ug(const MixedGraph& g, const Guards& guards = {});

/// Standard imset of a chain graph:
/// d(N) - d(empty) + sum over chain components C of
/// { d(pa(C)) - d(C u pa(C)) + u of the closure graph of C }.
Imset standard_imset_cg(const MixedGraph& g, const Guards& guards = {});

/// Which specialization of the chain-graph construction a graph falls under.
enum class Reduction { UG, DAG, DagEquivalentCG, GeneralCG };
const char* to_string(Reduction r);
Reduction reduction_of(const MixedGraph& g);

/// Conditional independence test against a standard imset produced by this
/// module: u - u<A,B|C> is combinatorial.
bool ci_test(const Imset& standard, const Triplet& t);

/// Outcome of merging a meta-arrow upper => lower.
struct MergeResult {
  bool feasible = false;
  /// pa(lower) intersected with upper is a clique.
  bool parents_in_upper_clique = false;
  /// pa(lower) minus upper lies within pa(b) for every b in that intersection.
  bool outside_parents_shared = false;
  std::optional<MixedGraph> merged;
};

/// Feasible merging: when both conditions hold, every directed edge from
/// `upper` to `lower` becomes undirected. Throws InvalidArgument unless the
/// two sets are chain components joined by at least one directed edge.
MergeResult feasible_merge(const MixedGraph& g, VertexSet upper, VertexSet lower);

/// Repeatedly applies feasible merges (canonical order, restarting after each)
/// until none applies. The fixpoint is the largest chain graph equivalent to g.
MixedGraph largest_equivalent(const MixedGraph& g);

/// Equality of chain-graph standard imsets.
bool imset_equivalent(const MixedGraph& g, const MixedGraph& h, const Guards& guards = {});

}  // namespace imsets

#endif  // IMSETS_STANDARD_HPP
