#include "imsets/standard.hpp"

#include <algorithm>

#include "imsets/error.hpp"
#include "imsets/separation.hpp"

namespace imsets {

Imset standard_imset_dag(const MixedGraph& g) {
  if (!g.is_dag()) {
    throw InvalidArgument("standard_imset_dag: requires a directed acyclic graph");
  }
  Imset u = delta(g.vertices()) - delta(VertexSet{});
  for (int i : g.vertices()) {
    const VertexSet pa = g.parents(i);
    u += delta(pa);
    u -= delta(pa.with(i));
  }
  return u;
}

Imset standard_imset_decomposable(const MixedGraph& g, const MpDecomposition& d) {
  require_ug(g, "standard_imset_decomposable");
  for (VertexSet comp : d.components) {
    if (!is_clique(g, comp)) {
      throw InvalidArgument("standard_imset_decomposable: graph is not chordal; use the undirected-graph form");
    }
  }
  Imset u = delta(g.vertices());
  for (VertexSet k : d.components) u -= delta(k);
  for (const auto& [s, nu] : d.separators) u += nu * delta(s);
  return u;
}

Imset standard_imset_decomposable(const MixedGraph& g) {
  require_ug(g, "standard_imset_decomposable");
  return standard_imset_decomposable(g, mpd_decompose(g));
}

Imset v_imset_ug(const MixedGraph& g, const Guards& guards) {
  require_ug(g, "v_imset_ug");
  Imset v;
  for (const MixedGraph& t : minimal_triangulations(g, guards)) v += standard_imset_decomposable(t);
  return v;
}

Imset standard_imset_ug(const MixedGraph& g, const Guards& guards) {
  require_ug(g, "standard_imset_ug");
  const MpDecomposition d = mpd_decompose(g);
  Imset u = delta(g.vertices());
  for (VertexSet v : d.components) u -= delta(v);
  for (const auto& [s, nu] : d.separators) u += nu * delta(s);
  const auto per = component_triangulations(g, d, guards);
  for (const auto& triangulations : per) {
    for (const MixedGraph& t : triangulations) u += standard_imset_decomposable(t);
  }
  return u;
}

Imset standard_imset_cg(const MixedGraph& g, const Guards& guards) {
  require_cg(g, "standard_imset_cg");
  Imset u = delta(g.vertices()) - delta(VertexSet{});
  for (VertexSet comp : chain_components(g)) {
    const VertexSet pa = parents(g, comp);
    u += delta(pa);
    u -= delta(comp | pa);
    u += standard_imset_ug(closure_graph(g, comp), guards);
  }
  return u;
}

const char* to_string(Reduction r) {
  switch (r) {
    case Reduction::UG: return "ug";
    case Reduction::DAG: return "dag";
    case Reduction::DagEquivalentCG: return "dag-equivalent-cg";
    case Reduction::GeneralCG: return "cg";
  }
  return "?";
}

Reduction reduction_of(const MixedGraph& g) {
  require_cg(g, "reduction_of");
  if (g.is_ug()) return Reduction::UG;
  if (g.is_dag()) return Reduction::DAG;
  return is_dag_equivalent(g) ? Reduction::DagEquivalentCG : Reduction::GeneralCG;
}

bool ci_test(const Imset& standard, const Triplet& t) { return is_combinatorial(standard - semi_elementary(t)); }

MergeResult feasible_merge(const MixedGraph& g, VertexSet upper, VertexSet lower) {
  require_cg(g, "feasible_merge");
  const auto comps = chain_components(g);
  auto is_comp = [&](VertexSet s) { return std::find(comps.begin(), comps.end(), s) != comps.end(); };
  if (!is_comp(upper) || !is_comp(lower)) {
    throw InvalidArgument("feasible_merge: upper and lower must be chain components");
  }
  bool arrow = false;
  for (int a : upper) arrow = arrow || g.children(a).intersects(lower);
  if (!arrow) throw InvalidArgument("feasible_merge: no directed edge from upper to lower (not a meta-arrow)");

  MergeResult r;
  const VertexSet pa_lower = parents(g, lower);
  const VertexSet k = pa_lower & upper;
  r.parents_in_upper_clique = is_clique(g, k);
  r.outside_parents_shared = true;
  for (int b : k) {
    if (!(pa_lower - upper).subset_of(g.parents(b))) r.outside_parents_shared = false;
  }
  r.feasible = r.parents_in_upper_clique && r.outside_parents_shared;
  if (!r.feasible) return r;

  MixedGraph::Builder b(g);
  for (int a : upper) {
    for (int c : g.children(a) & lower) {
      b.remove_edge(a, c);
      b.add_undirected(a, c);
    }
  }
  MixedGraph merged = std::move(b).build();
  if (!merged.is_chain_graph() || complexes(merged) != complexes(g)) {
    throw InvariantViolation("feasible_merge: merged graph is not an equivalent chain graph");
  }
  r.merged = std::move(merged);
  return r;
}

MixedGraph largest_equivalent(const MixedGraph& g) {
  require_cg(g, "largest_equivalent");
  MixedGraph current = g;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    const auto comps = chain_components(current);
    for (VertexSet upper : comps) {
      for (VertexSet lower : comps) {
        if (upper == lower) continue;
        bool arrow = false;
        for (int a : upper) arrow = arrow || current.children(a).intersects(lower);
        if (!arrow) continue;
        MergeResult r = feasible_merge(current, upper, lower);
        if (r.feasible) {
          current = std::move(*r.merged);
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
  }
  return current;
}

bool imset_equivalent(const MixedGraph& g, const MixedGraph& h, const Guards& guards) {
  require_cg(g, "imset_equivalent");
  require_cg(h, "imset_equivalent");
  if (!(g.labels() == h.labels()) || g.vertices() != h.vertices()) {
    throw InvalidArgument("imset_equivalent: graphs have different vertex sets");
  }
  return standard_imset_cg(g, guards) == standard_imset_cg(h, guards);
}

}  // namespace imsets
