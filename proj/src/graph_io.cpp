#include "imsets/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "imsets/error.hpp"

namespace imsets {

namespace {

struct RawEdge {
  std::string from;
  std::string to;
  bool directed;
  int line;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InvalidArgument("graph line " + std::to_string(line) + ": " + msg);
}

}  // namespace

MixedGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<RawEdge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2) fail(lineno, "expected 'vertex <label>'");
      for (const auto& n : names) {
        if (n == tok[1]) fail(lineno, "vertex '" + tok[1] + "' declared twice");
      }
      names.push_back(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 || (tok[2] != "--" && tok[2] != "->")) {
        fail(lineno, "expected 'edge <label> -- <label>' or 'edge <label> -> <label>'");
      }
      edges.push_back({tok[1], tok[3], tok[2] == "->", lineno});
    } else {
      fail(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  LabelsPtr labels;
  try {
    labels = make_labels(names);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("graph: ") + e.what());
  }
  MixedGraph::Builder b(labels, labels->all());
  for (const auto& e : edges) {
    int from = labels->find(e.from);
    int to = labels->find(e.to);
    if (from < 0) fail(e.line, "unknown vertex '" + e.from + "'");
    if (to < 0) fail(e.line, "unknown vertex '" + e.to + "'");
    try {
      if (e.directed) {
        b.add_directed(from, to);
      } else {
        b.add_undirected(from, to);
      }
    } catch (const InvalidArgument& err) {
      fail(e.line, err.what());
    }
  }
  return std::move(b).build();
}

MixedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const MixedGraph& g) {
  const Labels& l = g.labels();
  std::string out;
  for (int v : g.vertices()) out += "vertex " + l.name(v) + "\n";
  for (auto [a, b] : g.undirected_edges()) out += "edge " + l.name(a) + " -- " + l.name(b) + "\n";
  for (auto [a, b] : g.directed_edges()) out += "edge " + l.name(a) + " -> " + l.name(b) + "\n";
  return out;
}

}  // namespace imsets
