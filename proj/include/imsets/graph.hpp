#ifndef IMSETS_GRAPH_HPP
#define IMSETS_GRAPH_HPP

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imsets/vertex_set.hpp"

namespace imsets {

/// Vertex label table. Labels are kept in lexicographic order so that vertex
/// indices, and therefore every derived object, are canonical.
class Labels {
 public:
  Labels() = default;
  /// Sorts and deduplicates; throws InvalidArgument for more than 32 labels.
  explicit Labels(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 if unknown.
  int find(std::string_view name) const;
  /// Throws InvalidArgument if unknown.
  int index(std::string_view name) const;
  VertexSet all() const { return VertexSet::first_n(size()); }

  /// "{a,b,c}"; "{}" for the empty set.
  std::string format(VertexSet s) const;
  /// Comma-separated labels without braces; "" for the empty set.
  std::string join(VertexSet s, std::string_view sep = ",") const;
  /// Parses a comma-separated label list, with or without surrounding braces.
  VertexSet parse_set(std::string_view text) const;

  bool operator==(const Labels&) const = default;

 private:
  std::vector<std::string> names_;
};

using LabelsPtr = std::shared_ptr<const Labels>;

LabelsPtr make_labels(std::vector<std::string> names);
/// Labels "a", "b", ... for quick construction in tests and generators.
LabelsPtr letter_labels(int n);

enum class GraphKind { UG, DAG, CGProper, NotCG };

const char* to_string(GraphKind kind);

using Edge = std::pair<int, int>;

/// A simple graph with undirected and directed edges over a subset of a
/// labeled universe. Immutable once built; use Builder to construct or derive.
class MixedGraph {
 public:
  class Builder;

  MixedGraph() = default;

  const Labels& labels() const { return *labels_; }
  const LabelsPtr& labels_ptr() const { return labels_; }
  VertexSet vertices() const { return vertices_; }
  int order() const { return vertices_.size(); }

  VertexSet neighbors(int v) const { return undirected_[static_cast<std::size_t>(v)]; }
  VertexSet parents(int v) const { return parents_[static_cast<std::size_t>(v)]; }
  VertexSet children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  VertexSet adjacent(int v) const { return neighbors(v) | parents(v) | children(v); }

  bool has_undirected(int a, int b) const { return neighbors(a).contains(b); }
  bool has_directed(int from, int to) const { return children(from).contains(to); }
  bool is_adjacent(int a, int b) const { return adjacent(a).contains(b); }

  /// Sorted (a < b) undirected edges.
  std::vector<Edge> undirected_edges() const;
  /// Sorted directed edges (from, to).
  std::vector<Edge> directed_edges() const;
  std::size_t edge_count() const;

  GraphKind kind() const { return kind_; }
  /// No directed edges.
  bool is_ug() const { return kind_ == GraphKind::UG; }
  /// No undirected edges and acyclic; an edgeless graph is both UG and DAG.
  bool is_dag() const { return kind_ == GraphKind::DAG || (kind_ == GraphKind::UG && edge_count() == 0); }
  bool is_chain_graph() const { return kind_ != GraphKind::NotCG; }

  bool operator==(const MixedGraph& other) const;

 private:
  LabelsPtr labels_;
  VertexSet vertices_;
  std::array<VertexSet, kMaxVertices> undirected_{};
  std::array<VertexSet, kMaxVertices> parents_{};
  std::array<VertexSet, kMaxVertices> children_{};
  GraphKind kind_ = GraphKind::UG;

  friend class Builder;
};

class MixedGraph::Builder {
 public:
  Builder(LabelsPtr labels, VertexSet vertices);
  /// Starts from a copy of g.
  explicit Builder(const MixedGraph& g);

  /// Both throw InvalidArgument on a self-loop, a vertex outside the vertex
  /// set, or a pair that already carries an edge.
  Builder& add_undirected(int a, int b);
  Builder& add_directed(int from, int to);
  /// Removes whatever edge joins a and b (no-op if none).
  Builder& remove_edge(int a, int b);

  MixedGraph build() &&;

 private:
  void check_pair(int a, int b) const;
  MixedGraph g_;
};

/// An ordered triple <A,B|C> of pairwise disjoint vertex sets, A and B
/// nonempty.
struct Triplet {
  VertexSet a;
  VertexSet b;
  VertexSet c;

  /// Throws InvalidArgument unless the sets are disjoint and A, B nonempty.
  static Triplet make(VertexSet a, VertexSet b, VertexSet c);
  /// Same statement with A and B swapped so that a < b by encoding.
  Triplet canonical() const;
  bool is_elementary() const { return a.size() == 1 && b.size() == 1; }

  auto operator<=>(const Triplet&) const = default;
};

/// Parses "A|B|C" where each part is a comma-separated label list.
Triplet parse_triplet(const Labels& labels, std::string_view text);
std::string format_triplet(const Labels& labels, const Triplet& t);

// ---- structural queries -------------------------------------------------

GraphKind classify(const MixedGraph& g);

/// Chain components in topological order; ties broken by smallest vertex.
/// Throws InvalidArgument for graphs that are not chain graphs.
std::vector<VertexSet> chain_components(const MixedGraph& g);

/// Connectivity components of the undirected part restricted to s,
/// ordered by smallest member.
std::vector<VertexSet> undirected_components(const MixedGraph& g, VertexSet s);
/// Connectivity components of the underlying graph restricted to s.
std::vector<VertexSet> connected_components(const MixedGraph& g, VertexSet s);

/// Union of the parents of members of c, minus c.
VertexSet parents(const MixedGraph& g, VertexSet c);
/// Union of the children of members of c, minus c.
VertexSet children(const MixedGraph& g, VertexSet c);
/// Vertices adjacent (in the underlying graph) to some member of c, minus c.
VertexSet adjacent(const MixedGraph& g, VertexSet c);

/// s together with every vertex that has a path to some member of s.
VertexSet ancestral_set(const MixedGraph& g, VertexSet s);

MixedGraph induced_subgraph(const MixedGraph& g, VertexSet s);
MixedGraph underlying(const MixedGraph& g);
bool is_clique(const MixedGraph& g, VertexSet s);

/// A graph with the same vertices and no edges.
MixedGraph edgeless(LabelsPtr labels, VertexSet vertices);
/// Complete undirected graph on the vertex set.
MixedGraph complete_ug(LabelsPtr labels, VertexSet vertices);
/// Returns g plus undirected edges making every pair in s adjacent.
MixedGraph complete_on(const MixedGraph& g, VertexSet s);

/// Throws InvalidArgument unless s lies within g's vertices.
void require_within(const MixedGraph& g, VertexSet s, std::string_view what);
void require_ug(const MixedGraph& g, std::string_view op);
void require_cg(const MixedGraph& g, std::string_view op);

}  // namespace imsets

#endif  // IMSETS_GRAPH_HPP
