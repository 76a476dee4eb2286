#ifndef IMSETS_TESTS_FIXTURES_HPP
#define IMSETS_TESTS_FIXTURES_HPP

#include <string>

#include "imsets/graph.hpp"
#include "imsets/graph_io.hpp"
#include "imsets/imset.hpp"

namespace fx {

inline const char* kFig1 =
    "vertex a\nvertex b\nvertex c\nvertex d\nvertex e\n"
    "edge a -- b\nedge b -- c\nedge a -- c\nedge a -- d\nedge c -- d\nedge c -- e\nedge d -- e\n";
inline const char* kFig3 =
    "vertex a\nvertex b\nvertex c\nvertex d\nvertex e\n"
    "edge a -- b\nedge b -- c\nedge c -- d\nedge d -- a\nedge c -- e\nedge d -- e\n";
inline const char* kClosureC4 = "vertex a\nvertex b\nvertex c\nvertex d\nedge a -> c\nedge b -> d\nedge c -- d\n";

inline imsets::MixedGraph graph(const std::string& text) { return imsets::parse_graph(text); }
inline imsets::VertexSet set(const imsets::MixedGraph& g, const std::string& s) { return g.labels().parse_set(s); }
inline imsets::Triplet trip(const imsets::MixedGraph& g, const std::string& s) {
  return imsets::parse_triplet(g.labels(), s);
}
inline imsets::Imset u(const imsets::MixedGraph& g, const std::string& s) {
  return imsets::semi_elementary(trip(g, s));
}
inline imsets::Imset d(const imsets::MixedGraph& g, const std::string& s) { return imsets::delta(set(g, s)); }

}  // namespace fx

#endif
