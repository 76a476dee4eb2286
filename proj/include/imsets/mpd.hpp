#ifndef IMSETS_MPD_HPP
#define IMSETS_MPD_HPP

#include <map>
#include <vector>

#include "imsets/graph.hpp"

namespace imsets {

/// Maximal prime decomposition of an undirected graph.
struct MpDecomposition {
  /// mp-components, sorted by encoding.
  std::vector<VertexSet> components;
  /// Clique minimal vertex separators with their multiplicities. The empty set
  /// appears (number of connectivity components - 1) times for disconnected
  /// graphs.
  std::map<VertexSet, int> separators;
  /// The components in a D-ordered (running intersection) sequence.
  std::vector<VertexSet> order;
};

/// Maximum cardinality search visiting order over g's vertices. Ties go to the
/// smallest vertex; the search starts at the smallest vertex.
std::vector<int> mcs_order(const MixedGraph& g);

bool is_chordal(const MixedGraph& g);
/// Decomposability via the mp-criterion: every mp-component is a clique.
bool is_decomposable(const MixedGraph& g);

/// Inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted.
std::vector<VertexSet> maximal_cliques(const MixedGraph& g);

/// Every minimal (u,v)-separator over all non-adjacent pairs, sorted. Includes
/// the empty set when g is disconnected. Guarded to 16 vertices.
std::vector<VertexSet> minimal_vertex_separators(const MixedGraph& g);
inline constexpr int kMaxSeparatorVertices = 16;

/// Minimal (u,v)-separators of g for one non-adjacent pair.
std::vector<VertexSet> minimal_separators_between(const MixedGraph& g, int u, int v);

/// Recursive decomposition by clique minimal separators.
MpDecomposition mpd_decompose(const MixedGraph& g);

/// True iff `order` is a D-ordered sequence: each S_i lies inside an earlier
/// member.
bool has_running_intersection(const std::vector<VertexSet>& order);
/// Separators S_2, ..., S_m realized by a sequence, counted.
std::map<VertexSet, int> sequence_separators(const std::vector<VertexSet>& order);

}  // namespace imsets

#endif  // IMSETS_MPD_HPP
