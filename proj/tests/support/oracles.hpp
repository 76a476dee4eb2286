// Brute-force reference implementations and graph generators for tests.
#ifndef IMSETS_TESTS_ORACLES_HPP
#define IMSETS_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "imsets/graph.hpp"
#include "imsets/imset.hpp"

namespace oracle {

using imsets::Edge;
using imsets::LabelsPtr;
using imsets::MixedGraph;
using imsets::Triplet;
using imsets::VertexSet;

MixedGraph ug(int n, const std::vector<Edge>& edges);
MixedGraph cycle(int n);
MixedGraph from_text(const std::string& text);

/// Every undirected graph on n labeled vertices.
std::vector<MixedGraph> all_ugs(int n);
/// Every chain graph on n labeled vertices (each pair: absent, --, ->, <-).
std::vector<MixedGraph> all_chain_graphs(int n);
MixedGraph random_ug(int n, std::mt19937_64& rng, double p = 0.5);
/// Random levels; edges inside a level undirected, across levels pointing up.
MixedGraph random_cg(int n, std::mt19937_64& rng, double p = 0.5);

/// Chain graph test by search over level assignments.
bool is_chain_graph(const MixedGraph& g);
/// Reachability from A to B avoiding C, by transitive closure.
bool separated(const MixedGraph& ug, const Triplet& t);
bool connected(const MixedGraph& ug, VertexSet s);
/// Chordality by repeated removal of simplicial vertices.
bool chordal(const MixedGraph& ug);
/// Subset scan: every inclusion-maximal clique.
std::vector<VertexSet> maximal_cliques(const MixedGraph& ug);
/// Minimal (u,v)-separators over all non-adjacent pairs, by subset scan.
std::vector<VertexSet> minimal_separators(const MixedGraph& ug);
/// g[s] has no clique separator (the empty set included).
bool prime(const MixedGraph& ug, VertexSet s);
/// All chordal fill-edge sets without a chordal proper subset, as sorted
/// fill-edge lists.
std::vector<std::vector<Edge>> minimal_triangulations(const MixedGraph& ug);
/// Separators of a maximum-weight spanning tree of the clique graph, plus the
/// empty set once per extra connectivity component.
std::map<VertexSet, int> junction_tree_separators(const MixedGraph& chordal_ug);
/// Among chain graphs with g's skeleton and independence model, the one with
/// the most undirected edges; fails the test run if it is not unique.
MixedGraph largest_equivalent(const MixedGraph& g);
/// Separation model of a chain graph as a bitmap over all_triplets order.
std::vector<bool> model_bits(const MixedGraph& g);

std::string describe(const MixedGraph& g);

}  // namespace oracle

#endif
