#include "imsets/triangulate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "imsets/error.hpp"
#include "imsets/separation.hpp"

namespace imsets {

namespace {

inline constexpr int kMaxLocal = 16;

// Set of vertex pairs over at most 16 local vertices.
struct PairSet {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static int index(int i, int j) {
    if (i < j) std::swap(i, j);
    return i * (i - 1) / 2 + j;
  }
  void set(int i, int j) {
    int k = index(i, j);
    if (k < 64) {
      lo |= std::uint64_t{1} << k;
    } else {
      hi |= std::uint64_t{1} << (k - 64);
    }
  }
  bool test(int i, int j) const {
    int k = index(i, j);
    return k < 64 ? (lo >> k) & 1u : (hi >> (k - 64)) & 1u;
  }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool subset_of(const PairSet& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
  PairSet operator|(const PairSet& o) const { return {lo | o.lo, hi | o.hi}; }
  bool operator==(const PairSet&) const = default;
};

// Keeps the inclusion-minimal members of `sets`, deduplicated.
std::vector<PairSet> minimal_members(std::vector<PairSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const PairSet& a, const PairSet& b) {
    int ca = a.count();
    int cb = b.count();
    if (ca != cb) return ca < cb;
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  });
  std::vector<PairSet> kept;
  for (const PairSet& s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const PairSet& k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

bool fill_less(const std::vector<Edge>& a, const std::vector<Edge>& b) { return a < b; }

// Product of counts; saturates instead of overflowing.
std::size_t saturating_product(const std::vector<std::size_t>& counts) {
  std::size_t p = 1;
  for (std::size_t c : counts) {
    if (c != 0 && p > SIZE_MAX / c) return SIZE_MAX;
    p *= c;
  }
  return p;
}

std::string describe_counts(const std::vector<VertexSet>& comps, const std::vector<std::size_t>& counts,
                            const Labels& labels) {
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += labels.format(comps[i]) + ":" + std::to_string(counts[i]);
  }
  return out;
}

// Calls f(choice) for every index tuple of the mixed-radix space `sizes`.
template <typename F>
void for_each_choice(const std::vector<std::size_t>& sizes, F&& f) {
  std::vector<std::size_t> choice(sizes.size(), 0);
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; })) return;
  while (true) {
    f(choice);
    std::size_t k = 0;
    while (k < sizes.size()) {
      if (++choice[k] < sizes[k]) break;
      choice[k] = 0;
      ++k;
    }
    if (k == sizes.size()) return;
  }
}

}  // namespace

std::vector<Edge> fill_edges(const MixedGraph& h, const MixedGraph& h2) {
  std::vector<Edge> out;
  for (int a : h2.vertices()) {
    for (int b : h2.adjacent(a)) {
      if (a < b && !(h.vertices().contains(a) && h.vertices().contains(b) && h.is_adjacent(a, b))) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

bool is_minimal_triangulation(const MixedGraph& h, const MixedGraph& h2) {
  require_ug(h, "is_minimal_triangulation");
  require_ug(h2, "is_minimal_triangulation");
  if (h.vertices() != h2.vertices()) throw InvalidArgument("is_minimal_triangulation: vertex sets differ");
  for (auto [a, b] : h.undirected_edges()) {
    if (!h2.has_undirected(a, b)) {
      throw InvalidArgument("is_minimal_triangulation: candidate is missing edge " + h.labels().name(a) + "--" +
                            h.labels().name(b));
    }
  }
  if (!is_chordal(h2)) throw InvalidArgument("is_minimal_triangulation: candidate is not chordal");
  for (auto [u, v] : fill_edges(h, h2)) {
    for (VertexSet s : minimal_separators_between(h, u, v)) {
      if (is_clique(h2, s)) return false;
    }
  }
  return true;
}

std::vector<MixedGraph> minimal_triangulations_prime(const MixedGraph& g, const Guards& guards) {
  require_ug(g, "minimal_triangulations_prime");
  const int limit = std::min(guards.max_component_vertices, kMaxLocal);
  if (g.order() > limit) {
    throw GuardExceeded("minimal_triangulations_prime: " + std::to_string(g.order()) +
                        " vertices exceeds the limit of " + std::to_string(limit));
  }
  const std::vector<int> verts = g.vertices().members();
  const int n = static_cast<int>(verts.size());
  std::array<std::uint32_t, kMaxLocal> adj{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.has_undirected(verts[i], verts[j])) adj[i] |= std::uint32_t{1} << j;
    }
  }
  const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
  // Edges created among the remaining vertices once `gone` is eliminated:
  // the neighborhood of every component of g[gone] becomes a clique.
  auto fill_after = [&](std::uint32_t gone) {
    PairSet f;
    std::uint32_t rest = gone;
    while (rest) {
      std::uint32_t comp = rest & (~rest + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t fr = frontier; fr; fr &= fr - 1) next |= adj[std::countr_zero(fr)];
        next &= gone & ~comp;
        comp |= next;
        frontier = next;
      }
      rest &= ~comp;
      std::uint32_t nb = 0;
      for (std::uint32_t c = comp; c; c &= c - 1) nb |= adj[std::countr_zero(c)];
      nb &= full & ~gone;
      for (std::uint32_t x = nb; x; x &= x - 1) {
        int i = std::countr_zero(x);
        for (std::uint32_t y = x & (x - 1); y; y &= y - 1) {
          int j = std::countr_zero(y);
          if (!((adj[i] >> j) & 1u)) f.set(i, j);
        }
      }
    }
    return f;
  };
  const std::size_t state_cap = guards.max_per_component * 16;
  std::vector<std::vector<PairSet>> results(std::size_t{full} + 1);
  results[full] = {PairSet{}};
  for (std::int64_t s = static_cast<std::int64_t>(full) - 1; s >= 0; --s) {
    const auto gone = static_cast<std::uint32_t>(s);
    const PairSet here = fill_after(gone);
    std::vector<PairSet> cand;
    for (std::uint32_t left = full & ~gone; left; left &= left - 1) {
      for (const PairSet& r : results[gone | (left & (~left + 1))]) cand.push_back(here | r);
    }
    results[gone] = minimal_members(std::move(cand));
    if (results[gone].size() > state_cap) {
      throw GuardExceeded("minimal_triangulations_prime: intermediate enumeration exceeded " +
                          std::to_string(state_cap) + " partial triangulations");
    }
  }
  const auto& found = results[0];
  if (found.size() > guards.max_per_component) {
    throw GuardExceeded("minimal_triangulations_prime: " + std::to_string(found.size()) +
                        " minimal triangulations exceeds the limit of " + std::to_string(guards.max_per_component));
  }
  std::vector<std::pair<std::vector<Edge>, MixedGraph>> keyed;
  for (const PairSet& f : found) {
    MixedGraph::Builder b(g);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (f.test(i, j)) {
          b.add_undirected(verts[i], verts[j]);
          edges.emplace_back(verts[i], verts[j]);
        }
      }
    }
    keyed.emplace_back(std::move(edges), std::move(b).build());
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return fill_less(x.first, y.first); });
  std::vector<MixedGraph> out;
  for (auto& [edges, graph] : keyed) out.push_back(std::move(graph));
  return out;
}

std::vector<std::vector<MixedGraph>> component_triangulations(const MixedGraph& g, const MpDecomposition& d,
                                                              const Guards& guards) {
  require_ug(g, "component_triangulations");
  std::vector<std::vector<MixedGraph>> out;
  for (VertexSet v : d.components) {
    MixedGraph sub = induced_subgraph(g, v);
    if (is_clique(sub, v)) {
      out.push_back({std::move(sub)});
    } else {
      out.push_back(minimal_triangulations_prime(sub, guards));
    }
  }
  return out;
}

std::vector<MixedGraph> minimal_triangulations(const MixedGraph& g, const Guards& guards) {
  require_ug(g, "minimal_triangulations");
  const MpDecomposition d = mpd_decompose(g);
  const auto per = component_triangulations(g, d, guards);
  std::vector<std::size_t> counts;
  for (const auto& t : per) counts.push_back(t.size());
  if (saturating_product(counts) > guards.max_product) {
    throw GuardExceeded("minimal_triangulations: product of per-component counts exceeds " +
                        std::to_string(guards.max_product) + " (" + describe_counts(d.components, counts, g.labels()) +
                        ")");
  }
  std::vector<std::vector<std::vector<Edge>>> fills(per.size());
  for (std::size_t i = 0; i < per.size(); ++i) {
    MixedGraph sub = induced_subgraph(g, d.components[i]);
    for (const MixedGraph& t : per[i]) fills[i].push_back(fill_edges(sub, t));
  }
  std::vector<std::pair<std::vector<Edge>, MixedGraph>> keyed;
  for_each_choice(counts, [&](const std::vector<std::size_t>& choice) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const auto& f = fills[i][choice[i]];
      edges.insert(edges.end(), f.begin(), f.end());
    }
    std::sort(edges.begin(), edges.end());
    MixedGraph::Builder b(g);
    for (auto [a, c] : edges) b.add_undirected(a, c);
    keyed.emplace_back(std::move(edges), std::move(b).build());
  });
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return fill_less(x.first, y.first); });
  std::vector<MixedGraph> out;
  for (auto& [edges, graph] : keyed) out.push_back(std::move(graph));
  return out;
}

std::size_t count_minimal_triangulations(const MixedGraph& g, const Guards& guards) {
  require_ug(g, "count_minimal_triangulations");
  const MpDecomposition d = mpd_decompose(g);
  std::vector<std::size_t> counts;
  for (const auto& t : component_triangulations(g, d, guards)) counts.push_back(t.size());
  return saturating_product(counts);
}

MixedGraph closure_graph(const MixedGraph& g, VertexSet c) {
  require_cg(g, "closure_graph");
  auto comps = chain_components(g);
  if (std::find(comps.begin(), comps.end(), c) == comps.end()) {
    throw InvalidArgument("closure_graph: " + g.labels().format(c) + " is not a chain component");
  }
  return moral_graph(induced_subgraph(g, c | parents(g, c)));
}

DagEquivalence diagnose_dag_equivalence(const MixedGraph& g) {
  require_cg(g, "is_dag_equivalent");
  DagEquivalence out;
  for (VertexSet comp : chain_components(g)) {
    ComponentDiagnosis diag;
    diag.component = comp;
    diag.closure_chordal = is_chordal(closure_graph(g, comp));
    const MixedGraph hc = induced_subgraph(g, comp);
    diag.induced_chordal = is_chordal(hc);
    const VertexSet pa = parents(g, comp);
    for (int a : pa) {
      const VertexSet ch = g.children(a) & comp;
      for (int c : ch) {
        for (int d : ch) {
          if (c < d && !g.is_adjacent(c, d)) {
            const VertexSet rest = ch.without(c).without(d);
            if (!ug_separates(hc, Triplet{VertexSet::singleton(c), VertexSet::singleton(d), rest})) {
              diag.children_separated = false;
            }
          }
        }
      }
    }
    for (int a : pa) {
      for (int b : pa) {
        if (a >= b) continue;
        const VertexSet cha = g.children(a) & comp;
        const VertexSet chb = g.children(b) & comp;
        for (int c : cha - chb) {
          for (int d : chb - cha) {
            const VertexSet rest = (cha | chb).without(c).without(d);
            if (g.is_adjacent(c, d) ||
                !ug_separates(hc, Triplet{VertexSet::singleton(c), VertexSet::singleton(d), rest})) {
              diag.distinct_parents_separated = false;
            }
          }
        }
      }
    }
    out.equivalent = out.equivalent && diag.closure_chordal;
    out.components.push_back(diag);
  }
  return out;
}

bool is_dag_equivalent(const MixedGraph& g) {
  require_cg(g, "is_dag_equivalent");
  for (VertexSet comp : chain_components(g)) {
    if (!is_chordal(closure_graph(g, comp))) return false;
  }
  return true;
}

std::vector<MixedGraph> cg_minimal_triangulations(const MixedGraph& g, const Guards& guards) {
  require_cg(g, "cg_minimal_triangulations");
  const auto comps = chain_components(g);
  std::array<int, kMaxVertices> rank{};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (int v : comps[i]) rank[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::vector<std::vector<Edge>>> fills;
  std::vector<std::size_t> counts;
  for (VertexSet comp : comps) {
    const MixedGraph clo = closure_graph(g, comp);
    std::vector<std::vector<Edge>> options;
    for (const MixedGraph& t : minimal_triangulations(clo, guards)) options.push_back(fill_edges(clo, t));
    counts.push_back(options.size());
    fills.push_back(std::move(options));
  }
  if (saturating_product(counts) > guards.max_product) {
    throw GuardExceeded("cg_minimal_triangulations: product of per-component counts exceeds " +
                        std::to_string(guards.max_product) + " (" + describe_counts(comps, counts, g.labels()) + ")");
  }
  std::vector<std::pair<std::vector<Edge>, MixedGraph>> keyed;
  for_each_choice(counts, [&](const std::vector<std::size_t>& choice) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const auto& f = fills[i][choice[i]];
      edges.insert(edges.end(), f.begin(), f.end());
    }
    std::sort(edges.begin(), edges.end());
    MixedGraph::Builder b(g);
    for (auto [a, c] : edges) {
      const int ra = rank[static_cast<std::size_t>(a)];
      const int rc = rank[static_cast<std::size_t>(c)];
      if (ra == rc) {
        b.add_undirected(a, c);
      } else if (ra < rc) {
        b.add_directed(a, c);
      } else {
        b.add_directed(c, a);
      }
    }
    MixedGraph h = std::move(b).build();
    if (!h.is_chain_graph() || !is_dag_equivalent(h)) {
      throw InvariantViolation("cg_minimal_triangulations: mapped-back triangulation is not a DAG-equivalent chain graph");
    }
    keyed.emplace_back(std::move(edges), std::move(h));
  });
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return fill_less(x.first, y.first); });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  std::vector<MixedGraph> out;
  for (auto& [edges, graph] : keyed) out.push_back(std::move(graph));
  return out;
}

}  // namespace imsets
