#include "imsets/mpd.hpp"

#include <algorithm>
#include <set>

#include "imsets/error.hpp"

namespace imsets {

namespace {

VertexSet closed_nbhd(const MixedGraph& g, int v, VertexSet within) { return (g.adjacent(v) & within).with(v); }

VertexSet nbhd(const MixedGraph& g, VertexSet c, VertexSet within) { return adjacent(g, c) & within; }

// Minimal separators of the connected graph g[w] (Berry, Bordat and Cogis
// generation: seed from closed neighborhoods, then close under x in S).
std::set<VertexSet> connected_minimal_separators(const MixedGraph& g, VertexSet w) {
  std::set<VertexSet> seps;
  std::vector<VertexSet> queue;
  auto offer = [&](VertexSet removed) {
    for (VertexSet comp : connected_components(g, w - removed)) {
      VertexSet s = nbhd(g, comp, w);
      if (!s.empty() && seps.insert(s).second) queue.push_back(s);
    }
  };
  for (int v : w) offer(closed_nbhd(g, v, w));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexSet s = queue[i];
    for (int x : s) offer(s | (g.adjacent(x) & w));
  }
  return seps;
}

std::set<VertexSet> separators_within(const MixedGraph& g, VertexSet w) {
  std::set<VertexSet> out;
  auto parts = connected_components(g, w);
  if (parts.size() > 1) out.insert(VertexSet{});
  for (VertexSet part : parts) {
    auto s = connected_minimal_separators(g, part);
    out.insert(s.begin(), s.end());
  }
  return out;
}

void decompose_into(const MixedGraph& g, VertexSet w, std::vector<VertexSet>& atoms) {
  auto parts = connected_components(g, w);
  if (parts.size() > 1) {
    for (VertexSet part : parts) decompose_into(g, part, atoms);
    return;
  }
  for (VertexSet s : connected_minimal_separators(g, w)) {
    if (!is_clique(g, s)) continue;
    for (VertexSet comp : connected_components(g, w - s)) {
      decompose_into(g, comp | nbhd(g, comp, s), atoms);
    }
    return;
  }
  atoms.push_back(w);
}

// Prim's traversal of the maximum-weight spanning tree of the component
// intersection graph; a junction tree, so the visiting order has RIP.
std::vector<VertexSet> d_order(const std::vector<VertexSet>& comps) {
  std::vector<VertexSet> order;
  if (comps.empty()) return order;
  std::vector<bool> used(comps.size(), false);
  used[0] = true;
  order.push_back(comps[0]);
  for (std::size_t step = 1; step < comps.size(); ++step) {
    int best = -1;
    int best_weight = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (used[i]) continue;
      for (VertexSet placed : order) {
        int w = (comps[i] & placed).size();
        if (w > best_weight) {
          best_weight = w;
          best = static_cast<int>(i);
        }
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    order.push_back(comps[static_cast<std::size_t>(best)]);
  }
  return order;
}

}  // namespace

std::vector<int> mcs_order(const MixedGraph& g) {
  require_ug(g, "mcs_order");
  std::vector<int> order;
  std::array<int, kMaxVertices> weight{};
  VertexSet left = g.vertices();
  while (!left.empty()) {
    int pick = -1;
    for (int v : left) {
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    }
    order.push_back(pick);
    left = left.without(pick);
    for (int n : g.neighbors(pick) & left) ++weight[n];
  }
  return order;
}

bool is_chordal(const MixedGraph& g) {
  require_ug(g, "is_chordal");
  // The reverse of an MCS order is a perfect elimination ordering iff g is
  // chordal: every vertex's earlier-visited neighbors must form a clique.
  VertexSet visited;
  for (int v : mcs_order(g)) {
    VertexSet earlier = g.neighbors(v) & visited;
    for (int x : earlier) {
      if (!earlier.without(x).subset_of(g.neighbors(x))) return false;
    }
    visited = visited.with(v);
  }
  return true;
}

bool is_decomposable(const MixedGraph& g) {
  require_ug(g, "is_decomposable");
  for (VertexSet v : mpd_decompose(g).components) {
    if (!is_clique(g, v)) return false;
  }
  return true;
}

namespace {

void bron_kerbosch(const MixedGraph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (int u : p | x) {
    int k = (p & g.neighbors(u)).size();
    if (k > best) {
      best = k;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p = p.without(v);
    x = x.with(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const MixedGraph& g) {
  require_ug(g, "maximal_cliques");
  std::vector<VertexSet> out;
  bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_vertex_separators(const MixedGraph& g) {
  require_ug(g, "minimal_vertex_separators");
  if (g.order() > kMaxSeparatorVertices) {
    throw GuardExceeded("minimal_vertex_separators: " + std::to_string(g.order()) +
                        " vertices exceeds the limit of " + std::to_string(kMaxSeparatorVertices));
  }
  auto s = separators_within(g, g.vertices());
  return {s.begin(), s.end()};
}

std::vector<VertexSet> minimal_separators_between(const MixedGraph& g, int u, int v) {
  require_ug(g, "minimal_separators_between");
  std::vector<VertexSet> out;
  if (u == v || g.is_adjacent(u, v)) return out;
  for (VertexSet s : separators_within(g, g.vertices())) {
    if (s.contains(u) || s.contains(v)) continue;
    bool u_full = false;
    bool v_full = false;
    for (VertexSet comp : connected_components(g, g.vertices() - s)) {
      if (comp.contains(u) && comp.contains(v)) break;
      const bool full = nbhd(g, comp, g.vertices()) == s;
      if (comp.contains(u)) u_full = full;
      if (comp.contains(v)) v_full = full;
    }
    if (u_full && v_full) out.push_back(s);
  }
  return out;
}

MpDecomposition mpd_decompose(const MixedGraph& g) {
  require_ug(g, "mpd_decompose");
  std::vector<VertexSet> atoms;
  if (!g.vertices().empty()) decompose_into(g, g.vertices(), atoms);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  std::vector<VertexSet> comps;
  for (VertexSet a : atoms) {
    bool nested = std::any_of(atoms.begin(), atoms.end(), [&](VertexSet b) { return b != a && a.subset_of(b); });
    if (!nested) comps.push_back(a);
  }
  MpDecomposition d;
  d.components = comps;
  d.order = d_order(comps);
  if (!has_running_intersection(d.order)) {
    throw InvariantViolation("mpd_decompose: component sequence violates the running intersection property");
  }
  d.separators = sequence_separators(d.order);
  for (const auto& [s, nu] : d.separators) {
    if (!is_clique(g, s)) throw InvariantViolation("mpd_decompose: separator is not a clique");
  }
  return d;
}

bool has_running_intersection(const std::vector<VertexSet>& order) {
  VertexSet seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexSet s = order[i] & seen;
    if (i > 0) {
      bool inside = false;
      for (std::size_t k = 0; k < i && !inside; ++k) inside = s.subset_of(order[k]);
      if (!inside) return false;
    }
    seen |= order[i];
  }
  return true;
}

std::map<VertexSet, int> sequence_separators(const std::vector<VertexSet>& order) {
  std::map<VertexSet, int> out;
  VertexSet seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) ++out[order[i] & seen];
    seen |= order[i];
  }
  return out;
}

}  // namespace imsets
