#include "imsets/graph.hpp"

#include <algorithm>
#include <queue>

#include "imsets/error.hpp"

namespace imsets {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Labels::Labels(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  if (names_.size() > kMaxVertices) {
    throw InvalidArgument("universe has " + std::to_string(names_.size()) + " vertices; at most " +
                          std::to_string(kMaxVertices) + " are supported");
  }
}

int Labels::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

int Labels::index(std::string_view name) const {
  int v = find(name);
  if (v < 0) throw InvalidArgument("unknown vertex label '" + std::string(name) + "'");
  return v;
}

std::string Labels::join(VertexSet s, std::string_view sep) const {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += sep;
    out += name(v);
  }
  return out;
}

std::string Labels::format(VertexSet s) const { return "{" + join(s) + "}"; }

VertexSet Labels::parse_set(std::string_view text) const {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidArgument("unbalanced braces in set '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  VertexSet out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (item.empty()) throw InvalidArgument("empty label in set list");
    int v = index(item);
    if (out.contains(v)) throw InvalidArgument("label '" + std::string(item) + "' repeated in set");
    out = out.with(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw InvalidArgument("trailing comma in set list");
  }
  return out;
}

LabelsPtr make_labels(std::vector<std::string> names) {
  return std::make_shared<const Labels>(std::move(names));
}

LabelsPtr letter_labels(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  }
  return make_labels(std::move(names));
}

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::UG: return "UG";
    case GraphKind::DAG: return "DAG";
    case GraphKind::CGProper: return "CG";
    case GraphKind::NotCG: return "NOT-CG";
  }
  return "?";
}

// ---- MixedGraph ---------------------------------------------------------

std::vector<Edge> MixedGraph::undirected_edges() const {
  std::vector<Edge> out;
  for (int a : vertices_) {
    for (int b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Edge> MixedGraph::directed_edges() const {
  std::vector<Edge> out;
  for (int a : vertices_) {
    for (int b : children(a)) out.emplace_back(a, b);
  }
  return out;
}

std::size_t MixedGraph::edge_count() const {
  std::size_t n = 0;
  for (int v : vertices_) n += static_cast<std::size_t>(neighbors(v).size() + 2 * children(v).size());
  return n / 2;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
  if (vertices_ != other.vertices_) return false;
  if (labels_ != other.labels_ && !(labels_ && other.labels_ && *labels_ == *other.labels_)) return false;
  return undirected_ == other.undirected_ && children_ == other.children_;
}

MixedGraph::Builder::Builder(LabelsPtr labels, VertexSet vertices) {
  if (!labels) throw InvalidArgument("graph requires a label table");
  if (!vertices.subset_of(labels->all())) throw InvalidArgument("vertex set exceeds the label universe");
  g_.labels_ = std::move(labels);
  g_.vertices_ = vertices;
}

MixedGraph::Builder::Builder(const MixedGraph& g) : g_(g) {}

void MixedGraph::Builder::check_pair(int a, int b) const {
  if (a == b) throw InvalidArgument("self-loop at vertex '" + g_.labels().name(a) + "'");
  if (!g_.vertices_.contains(a) || !g_.vertices_.contains(b)) {
    throw InvalidArgument("edge endpoint outside the graph's vertex set");
  }
  if (g_.is_adjacent(a, b)) {
    throw InvalidArgument("duplicate edge between '" + g_.labels().name(a) + "' and '" + g_.labels().name(b) +
                          "'");
  }
}

MixedGraph::Builder& MixedGraph::Builder::add_undirected(int a, int b) {
  check_pair(a, b);
  g_.undirected_[a] = g_.undirected_[a].with(b);
  g_.undirected_[b] = g_.undirected_[b].with(a);
  return *this;
}

MixedGraph::Builder& MixedGraph::Builder::add_directed(int from, int to) {
  check_pair(from, to);
  g_.children_[from] = g_.children_[from].with(to);
  g_.parents_[to] = g_.parents_[to].with(from);
  return *this;
}

MixedGraph::Builder& MixedGraph::Builder::remove_edge(int a, int b) {
  g_.undirected_[a] = g_.undirected_[a].without(b);
  g_.undirected_[b] = g_.undirected_[b].without(a);
  g_.children_[a] = g_.children_[a].without(b);
  g_.children_[b] = g_.children_[b].without(a);
  g_.parents_[a] = g_.parents_[a].without(b);
  g_.parents_[b] = g_.parents_[b].without(a);
  return *this;
}

MixedGraph MixedGraph::Builder::build() && {
  g_.kind_ = classify(g_);
  return std::move(g_);
}

// ---- Triplet ------------------------------------------------------------

Triplet Triplet::make(VertexSet a, VertexSet b, VertexSet c) {
  if (a.empty() || b.empty()) throw InvalidArgument("triplet requires nonempty A and B");
  if (a.intersects(b) || a.intersects(c) || b.intersects(c)) {
    throw InvalidArgument("triplet sets must be pairwise disjoint");
  }
  return Triplet{a, b, c};
}

Triplet Triplet::canonical() const { return b < a ? Triplet{b, a, c} : *this; }

Triplet parse_triplet(const Labels& labels, std::string_view text) {
  auto p1 = text.find('|');
  auto p2 = p1 == std::string_view::npos ? p1 : text.find('|', p1 + 1);
  if (p2 == std::string_view::npos || text.find('|', p2 + 1) != std::string_view::npos) {
    throw InvalidArgument("triplet must have the form 'A|B|C', got '" + std::string(text) + "'");
  }
  return Triplet::make(labels.parse_set(text.substr(0, p1)), labels.parse_set(text.substr(p1 + 1, p2 - p1 - 1)),
                       labels.parse_set(text.substr(p2 + 1)));
}

std::string format_triplet(const Labels& labels, const Triplet& t) {
  return "<" + labels.join(t.a) + "|" + labels.join(t.b) + "|" + labels.join(t.c) + ">";
}

// ---- structural queries -------------------------------------------------

std::vector<VertexSet> undirected_components(const MixedGraph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::singleton(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & s) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const MixedGraph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::singleton(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.adjacent(v);
      next = (next & s) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

namespace {

// Component DAG of the undirected skeleton. Returns false if some directed
// edge stays inside a component or the condensation has a cycle; otherwise
// fills `order` with the components in topological order.
bool condense(const MixedGraph& g, std::vector<VertexSet>& order) {
  auto comps = undirected_components(g, g.vertices());
  const std::size_t m = comps.size();
  std::array<int, kMaxVertices> comp_of{};
  for (std::size_t i = 0; i < m; ++i) {
    for (int v : comps[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::vector<bool>> succ(m, std::vector<bool>(m, false));
  std::vector<int> indegree(m, 0);
  for (auto [from, to] : g.directed_edges()) {
    int cf = comp_of[static_cast<std::size_t>(from)];
    int ct = comp_of[static_cast<std::size_t>(to)];
    if (cf == ct) return false;
    if (!succ[cf][ct]) {
      succ[cf][ct] = true;
      ++indegree[ct];
    }
  }
  // Components are already sorted by smallest member, so a min-heap on the
  // component index breaks ties by smallest vertex.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t i = 0; i < m; ++i) {
    if (indegree[i] == 0) ready.push(static_cast<int>(i));
  }
  order.clear();
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    order.push_back(comps[static_cast<std::size_t>(c)]);
    for (std::size_t d = 0; d < m; ++d) {
      if (succ[c][d] && --indegree[d] == 0) ready.push(static_cast<int>(d));
    }
  }
  return order.size() == m;
}

}  // namespace

GraphKind classify(const MixedGraph& g) {
  bool any_directed = false;
  bool any_undirected = false;
  for (int v : g.vertices()) {
    any_directed |= !g.children(v).empty();
    any_undirected |= !g.neighbors(v).empty();
  }
  if (!any_directed) return GraphKind::UG;
  std::vector<VertexSet> order;
  if (!condense(g, order)) return GraphKind::NotCG;
  return any_undirected ? GraphKind::CGProper : GraphKind::DAG;
}

std::vector<VertexSet> chain_components(const MixedGraph& g) {
  std::vector<VertexSet> order;
  if (!condense(g, order)) throw InvalidArgument("chain_components: graph is not a chain graph");
  return order;
}

VertexSet parents(const MixedGraph& g, VertexSet c) {
  VertexSet out;
  for (int v : c) out |= g.parents(v);
  return out - c;
}

VertexSet children(const MixedGraph& g, VertexSet c) {
  VertexSet out;
  for (int v : c) out |= g.children(v);
  return out - c;
}

VertexSet adjacent(const MixedGraph& g, VertexSet c) {
  VertexSet out;
  for (int v : c) out |= g.adjacent(v);
  return out - c;
}

VertexSet ancestral_set(const MixedGraph& g, VertexSet s) {
  require_within(g, s, "ancestral_set");
  VertexSet out = s;
  VertexSet frontier = s;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.parents(v) | g.neighbors(v);
    next -= out;
    out |= next;
    frontier = next;
  }
  return out;
}

MixedGraph induced_subgraph(const MixedGraph& g, VertexSet s) {
  require_within(g, s, "induced_subgraph");
  MixedGraph::Builder b(g.labels_ptr(), s);
  for (int a : s) {
    for (int n : g.neighbors(a) & s) {
      if (a < n) b.add_undirected(a, n);
    }
    for (int c : g.children(a) & s) b.add_directed(a, c);
  }
  return std::move(b).build();
}

MixedGraph underlying(const MixedGraph& g) {
  MixedGraph::Builder b(g.labels_ptr(), g.vertices());
  for (int a : g.vertices()) {
    for (int n : g.adjacent(a)) {
      if (a < n) b.add_undirected(a, n);
    }
  }
  return std::move(b).build();
}

bool is_clique(const MixedGraph& g, VertexSet s) {
  require_within(g, s, "is_clique");
  for (int v : s) {
    if (!(s.without(v)).subset_of(g.adjacent(v))) return false;
  }
  return true;
}

MixedGraph edgeless(LabelsPtr labels, VertexSet vertices) {
  return MixedGraph::Builder(std::move(labels), vertices).build();
}

MixedGraph complete_ug(LabelsPtr labels, VertexSet vertices) {
  MixedGraph::Builder b(std::move(labels), vertices);
  for (int a : vertices) {
    for (int c : vertices) {
      if (a < c) b.add_undirected(a, c);
    }
  }
  return std::move(b).build();
}

MixedGraph complete_on(const MixedGraph& g, VertexSet s) {
  require_within(g, s, "complete_on");
  MixedGraph::Builder b(g);
  for (int a : s) {
    for (int c : s) {
      if (a < c && !g.is_adjacent(a, c)) b.add_undirected(a, c);
    }
  }
  return std::move(b).build();
}

void require_within(const MixedGraph& g, VertexSet s, std::string_view what) {
  if (!s.subset_of(g.vertices())) {
    throw InvalidArgument(std::string(what) + ": vertex set is not contained in the graph's vertices");
  }
}

void require_ug(const MixedGraph& g, std::string_view op) {
  if (!g.is_ug()) throw InvalidArgument(std::string(op) + ": requires an undirected graph");
}

void require_cg(const MixedGraph& g, std::string_view op) {
  if (!g.is_chain_graph()) throw InvalidArgument(std::string(op) + ": requires a chain graph");
}

}  // namespace imsets
