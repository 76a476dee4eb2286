#ifndef IMSETS_GRAPH_IO_HPP
#define IMSETS_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "imsets/graph.hpp"

namespace imsets {

/// Reads the line-oriented graph format:
///
///   # comment
///   vertex a
///   edge a -- b
///   edge a -> c
///
/// Every label must be declared by a `vertex` line. Duplicate vertices,
/// duplicate edges, self-loops and unknown labels are rejected with an
/// InvalidArgument naming the offending line.
MixedGraph parse_graph(std::string_view text);
MixedGraph read_graph_file(const std::string& path);

/// Inverse of parse_graph: vertices in label order, then undirected edges,
/// then directed edges, each sorted.
std::string format_graph(const MixedGraph& g);

}  // namespace imsets

#endif  // IMSETS_GRAPH_IO_HPP
