#include "imsets/separation.hpp"

#include <algorithm>
#include <set>

#include "imsets/error.hpp"

namespace imsets {

namespace {

void require_triplet_within(const MixedGraph& g, const Triplet& t, std::string_view op) {
  require_within(g, t.a | t.b | t.c, op);
}

// Extends the induced path `path` (inside `comp`) that starts at a child of
// `left`, reporting every complex that closes at its current end.
void grow_complexes(const MixedGraph& g, VertexSet comp, int left, std::vector<int>& path, VertexSet on_path,
                    std::set<Complex>& out) {
  const int end = path.back();
  // Vertices of the path before `end`.
  const VertexSet inner = on_path.without(end);
  for (int right : g.parents(end)) {
    if (right == left || g.is_adjacent(left, right)) continue;
    bool clean = true;
    for (int v : inner) {
      if (g.is_adjacent(right, v)) {
        clean = false;
        break;
      }
    }
    if (!clean) continue;
    Complex cx;
    if (left < right) {
      cx = Complex{left, path, right};
    } else {
      cx = Complex{right, std::vector<int>(path.rbegin(), path.rend()), left};
    }
    out.insert(std::move(cx));
  }
  for (int next : g.neighbors(end) & comp) {
    if (on_path.contains(next) || g.is_adjacent(left, next)) continue;
    // Induced: next may touch only `end` among path vertices.
    if (g.neighbors(next).intersects(inner)) continue;
    path.push_back(next);
    grow_complexes(g, comp, left, path, on_path.with(next), out);
    path.pop_back();
  }
}

}  // namespace

bool ug_separates(const MixedGraph& g, const Triplet& t) {
  require_ug(g, "ug_separates");
  require_triplet_within(g, t, "ug_separates");
  const VertexSet allowed = g.vertices() - t.c;
  VertexSet reached = t.a;
  VertexSet frontier = t.a;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - reached;
    if (next.intersects(t.b)) return false;
    reached |= next;
    frontier = next;
  }
  return !reached.intersects(t.b);
}

MixedGraph moral_graph(const MixedGraph& g) {
  require_cg(g, "moral_graph");
  MixedGraph::Builder b(underlying(g));
  VertexSet added[kMaxVertices] = {};
  for (VertexSet comp : chain_components(g)) {
    VertexSet pa = parents(g, comp);
    for (int x : pa) {
      for (int y : pa) {
        if (x < y && !g.is_adjacent(x, y) && !added[x].contains(y)) {
          b.add_undirected(x, y);
          added[x] = added[x].with(y);
        }
      }
    }
  }
  return std::move(b).build();
}

bool cg_separates(const MixedGraph& g, const Triplet& t) {
  require_cg(g, "cg_separates");
  require_triplet_within(g, t, "cg_separates");
  MixedGraph h = induced_subgraph(g, ancestral_set(g, t.a | t.b | t.c));
  return ug_separates(moral_graph(h), t);
}

std::vector<Complex> complexes(const MixedGraph& g) {
  require_cg(g, "complexes");
  std::set<Complex> found;
  for (VertexSet comp : chain_components(g)) {
    for (int start : comp) {
      for (int left : g.parents(start)) {
        std::vector<int> path{start};
        grow_complexes(g, comp, left, path, VertexSet::singleton(start), found);
      }
    }
  }
  return {found.begin(), found.end()};
}

bool frydenberg_equivalent(const MixedGraph& g, const MixedGraph& h) {
  require_cg(g, "frydenberg_equivalent");
  require_cg(h, "frydenberg_equivalent");
  if (!(g.labels() == h.labels()) || g.vertices() != h.vertices()) {
    throw InvalidArgument("frydenberg_equivalent: graphs have different vertex sets");
  }
  return underlying(g) == underlying(h) && complexes(g) == complexes(h);
}

std::vector<Triplet> all_triplets(VertexSet universe) {
  const std::vector<int> verts = universe.members();
  const std::size_t n = verts.size();
  std::vector<Triplet> out;
  // Base-4 digit per vertex: 0 outside, 1 in A, 2 in B, 3 in C.
  std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < total; ++code) {
    VertexSet a, b, c;
    for (std::size_t i = 0; i < n; ++i) {
      switch ((code >> (2 * i)) & 3u) {
        case 1: a = a.with(verts[i]); break;
        case 2: b = b.with(verts[i]); break;
        case 3: c = c.with(verts[i]); break;
        default: break;
      }
    }
    if (!a.empty() && !b.empty() && a < b) out.push_back(Triplet{a, b, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triplet> independence_model(const MixedGraph& g) {
  require_cg(g, "independence_model");
  if (g.order() > kMaxModelVertices) {
    throw GuardExceeded("independence_model: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                        std::to_string(kMaxModelVertices));
  }
  std::vector<Triplet> out;
  for (const Triplet& t : all_triplets(g.vertices())) {
    if (cg_separates(g, t)) out.push_back(t);
  }
  return out;
}

}  // namespace imsets
