#ifndef IMSETS_SEPARATION_HPP
#define IMSETS_SEPARATION_HPP

#include <vector>

#include "imsets/graph.hpp"

namespace imsets {

/// Induced subgraph c0 -> c1 - ... - ck <- c(k+1), k >= 1, with no other edges
/// among its vertices. Canonical form: left < right, path runs from the child
/// of `left` to the child of `right`.
struct Complex {
  int left = -1;
  std::vector<int> path;
  int right = -1;

  auto operator<=>(const Complex&) const = default;
};

/// True iff every path from A to B in the undirected graph g meets C.
bool ug_separates(const MixedGraph& g, const Triplet& t);

/// Underlying graph plus an edge joining every non-adjacent pair of parents of
/// a common chain component.
MixedGraph moral_graph(const MixedGraph& g);

/// Moralization criterion: separation in the moral graph of the subgraph
/// induced by an(A u B u C).
bool cg_separates(const MixedGraph& g, const Triplet& t);

/// All complexes of a chain graph, sorted.
std::vector<Complex> complexes(const MixedGraph& g);

/// Same underlying graph and the same complexes. Both graphs must be chain
/// graphs over the same label universe and vertex set.
bool frydenberg_equivalent(const MixedGraph& g, const MixedGraph& h);

/// Every triplet of the graph's vertex set with nonempty A and B, A < B by
/// encoding, in lexicographic (a, b, c) order.
std::vector<Triplet> all_triplets(VertexSet universe);

/// All triplets <A,B|C> (canonical, A < B) separated in g under the
/// moralization criterion. Guarded to at most 8 vertices.
std::vector<Triplet> independence_model(const MixedGraph& g);

inline constexpr int kMaxModelVertices = 8;

}  // namespace imsets

#endif  // IMSETS_SEPARATION_HPP
