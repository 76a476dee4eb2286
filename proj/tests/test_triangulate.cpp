#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "imsets/error.hpp"
#include "imsets/mpd.hpp"
#include "imsets/separation.hpp"
#include "imsets/triangulate.hpp"
#include "oracles.hpp"

using namespace imsets;
using fx::graph;
using fx::set;

namespace {

MixedGraph with_fill(const MixedGraph& g, const std::vector<Edge>& fill) {
  MixedGraph::Builder b(g);
  for (auto [x, y] : fill) b.add_undirected(x, y);
  return std::move(b).build();
}

std::vector<std::vector<Edge>> fills(const MixedGraph& g, const std::vector<MixedGraph>& ts) {
  std::vector<std::vector<Edge>> out;
  for (const MixedGraph& t : ts) out.push_back(fill_edges(g, t));
  std::sort(out.begin(), out.end());
  return out;
}

void check_against_oracle(const MixedGraph& g) {
  const auto ts = minimal_triangulations(g);
  REQUIRE_MESSAGE(fills(g, ts) == oracle::minimal_triangulations(g), oracle::describe(g));
  for (const MixedGraph& t : ts) {
    CHECK(is_chordal(t));
    CHECK(is_minimal_triangulation(g, t));
  }
  CHECK(count_minimal_triangulations(g) == ts.size());
}

}  // namespace

TEST_CASE("Ohtsuki minimality test") {
  const MixedGraph h = graph(fx::kFig3);
  const MixedGraph h1 = with_fill(h, {{1, 3}});
  CHECK(is_minimal_triangulation(h, h1));
  const MixedGraph c4 = oracle::cycle(4);
  CHECK_FALSE(is_minimal_triangulation(c4, with_fill(c4, {{0, 2}, {1, 3}})));
  const MixedGraph h0 = graph(fx::kFig1);
  CHECK(is_minimal_triangulation(h0, h0));

  std::string not_chordal, missing;
  try {
    is_minimal_triangulation(c4, c4);
  } catch (const InvalidArgument& e) {
    not_chordal = e.what();
  }
  try {
    is_minimal_triangulation(c4, oracle::ug(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}));
  } catch (const InvalidArgument& e) {
    missing = e.what();
  }
  CHECK_FALSE(not_chordal.empty());
  CHECK_FALSE(missing.empty());
  CHECK(not_chordal != missing);
}

TEST_CASE("Ohtsuki test agrees with subset minimality") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const MixedGraph g = oracle::random_ug(6, rng, 0.5);
    const auto minimal = oracle::minimal_triangulations(g);
    // Chordal supersets with one extra edge are never minimal.
    for (const auto& f : minimal) {
      CHECK(is_minimal_triangulation(g, with_fill(g, f)));
      for (int x : g.vertices())
        for (int y : g.vertices()) {
          if (x >= y || g.is_adjacent(x, y)) continue;
          if (std::find(f.begin(), f.end(), Edge{x, y}) != f.end()) continue;
          auto more = f;
          more.emplace_back(x, y);
          const MixedGraph t = with_fill(g, more);
          if (is_chordal(t)) CHECK_FALSE(is_minimal_triangulation(g, t));
        }
    }
  }
}

TEST_CASE("triangulations of prime graphs") {
  CHECK(minimal_triangulations_prime(oracle::cycle(4)).size() == 2);
  const MixedGraph h = graph(fx::kFig1);
  const auto one = minimal_triangulations_prime(h);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == h);
  CHECK(minimal_triangulations_prime(oracle::cycle(5)).size() == 5);
}

TEST_CASE("cycle counts are Catalan numbers") {
  CHECK(count_minimal_triangulations(oracle::cycle(4)) == 2);
  CHECK(count_minimal_triangulations(oracle::cycle(5)) == 5);
  CHECK(count_minimal_triangulations(oracle::cycle(6)) == 14);
  CHECK(count_minimal_triangulations(oracle::cycle(7)) == 42);
  CHECK(count_minimal_triangulations(oracle::cycle(8)) == 132);
}

TEST_CASE("triangulations of composite graphs") {
  const MixedGraph h = graph(fx::kFig3);
  const auto ts = minimal_triangulations(h);
  REQUIRE(ts.size() == 2);
  CHECK(fill_edges(h, ts[0]) == std::vector<Edge>{{0, 2}});
  CHECK(fill_edges(h, ts[1]) == std::vector<Edge>{{1, 3}});

  const MixedGraph two = oracle::ug(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  CHECK(minimal_triangulations(two).size() == 4);
  CHECK(count_minimal_triangulations(two) == 4);
}

TEST_CASE("minimal triangulations agree with the subset oracle") {
  for (const MixedGraph& g : oracle::all_ugs(5)) check_against_oracle(g);
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 80) {
    const MixedGraph g = oracle::random_ug(done % 2 ? 6 : 7, rng, 0.55);
    if (21 - static_cast<int>(g.undirected_edges().size()) > 14) continue;
    check_against_oracle(g);
    ++done;
  }
}

TEST_CASE("some minimal triangulation keeps each separation statement") {
  for (const MixedGraph& g : oracle::all_ugs(5)) {
    const auto ts = minimal_triangulations(g);
    for (const Triplet& t : all_triplets(g.vertices())) {
      if (!ug_separates(g, t)) continue;
      bool kept = false;
      for (const MixedGraph& h : ts) kept = kept || ug_separates(h, t);
      REQUIRE_MESSAGE(kept, oracle::describe(g));
    }
  }
}

TEST_CASE("guards") {
  Guards tight;
  tight.max_per_component = 13;
  CHECK_THROWS_AS(minimal_triangulations(oracle::cycle(6), tight), GuardExceeded);
  tight.max_per_component = 14;
  CHECK(minimal_triangulations(oracle::cycle(6), tight).size() == 14);

  Guards product;
  product.max_product = 3;
  const MixedGraph two = oracle::ug(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  CHECK_THROWS_WITH_AS(minimal_triangulations(two, product), doctest::Contains("{a,b,c,d}:2"), GuardExceeded);
  // The count never needs the product.
  CHECK(count_minimal_triangulations(two, product) == 4);

  Guards small;
  small.max_component_vertices = 4;
  CHECK_THROWS_AS(minimal_triangulations(oracle::cycle(5), small), GuardExceeded);
}

TEST_CASE("closure graphs") {
  const MixedGraph g = graph(fx::kClosureC4);
  const MixedGraph clo = closure_graph(g, set(g, "c,d"));
  CHECK(clo.undirected_edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(closure_graph(g, set(g, "a")).vertices() == set(g, "a"));
  CHECK(closure_graph(g, set(g, "a")).edge_count() == 0);
  const MixedGraph h = graph(fx::kFig3);
  CHECK(closure_graph(h, h.vertices()) == h);
  CHECK_THROWS_AS(closure_graph(g, set(g, "c")), InvalidArgument);
}

TEST_CASE("DAG equivalence") {
  CHECK_FALSE(is_dag_equivalent(graph(fx::kClosureC4)));
  CHECK_FALSE(is_dag_equivalent(oracle::cycle(4)));
  CHECK(is_dag_equivalent(graph(fx::kFig1)));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const MixedGraph u = oracle::random_ug(5, rng);
    CHECK(is_dag_equivalent(u) == is_chordal(u));
  }
  for (const MixedGraph& g : oracle::all_chain_graphs(4)) {
    if (g.is_dag()) CHECK(is_dag_equivalent(g));
  }
}

TEST_CASE("DAG-equivalence diagnostics agree with closure chordality") {
  std::vector<MixedGraph> gs = oracle::all_chain_graphs(4);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) gs.push_back(oracle::random_cg(5, rng, 0.6));
  for (const MixedGraph& g : gs) {
    const DagEquivalence d = diagnose_dag_equivalence(g);
    bool all = true;
    for (const ComponentDiagnosis& c : d.components) {
      CHECK(c.closure_chordal == is_chordal(closure_graph(g, c.component)));
      REQUIRE_MESSAGE(c.closure_chordal == (c.induced_chordal && c.children_separated && c.distinct_parents_separated),
                      oracle::describe(g));
      all = all && c.closure_chordal;
    }
    CHECK(d.equivalent == all);
  }
}

TEST_CASE("chain graph triangulations") {
  const MixedGraph g = graph(fx::kClosureC4);
  const auto ts = cg_minimal_triangulations(g);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == graph(std::string(fx::kClosureC4) + "edge a -> d\n"));
  CHECK(ts[1] == graph(std::string(fx::kClosureC4) + "edge b -> c\n"));

  const MixedGraph dag_eq = graph(fx::kFig1);
  REQUIRE(cg_minimal_triangulations(dag_eq).size() == 1);
  CHECK(cg_minimal_triangulations(dag_eq)[0] == dag_eq);

  // a points into the path c--b--d; filling a-b orients it a -> b.
  const char* bent = "vertex a\nvertex b\nvertex c\nvertex d\nedge a -> c\nedge a -> d\nedge c -- b\nedge b -- d\n";
  const auto bs = cg_minimal_triangulations(graph(bent));
  REQUIRE(bs.size() == 2);
  CHECK(std::find(bs.begin(), bs.end(), graph(std::string(bent) + "edge a -> b\n")) != bs.end());
  CHECK(std::find(bs.begin(), bs.end(), graph(std::string(bent) + "edge c -- d\n")) != bs.end());
}

TEST_CASE("chain graph triangulations: structure and separation on 4 vertices") {
  for (const MixedGraph& g : oracle::all_chain_graphs(4)) {
    const auto ts = cg_minimal_triangulations(g);
    REQUIRE_FALSE(ts.empty());
    for (const MixedGraph& h : ts) {
      CHECK(h.is_chain_graph());
      CHECK(is_dag_equivalent(h));
      for (auto [x, y] : g.undirected_edges()) CHECK(h.has_undirected(x, y));
      for (auto [x, y] : g.directed_edges()) CHECK(h.has_directed(x, y));
    }
    for (VertexSet c : chain_components(g)) {
      if (!is_chordal(closure_graph(g, c))) continue;
      const VertexSet s = c | parents(g, c);
      for (const MixedGraph& h : ts) CHECK(induced_subgraph(h, s) == induced_subgraph(g, s));
    }
    for (const Triplet& t : all_triplets(g.vertices())) {
      if (!cg_separates(g, t)) continue;
      bool kept = false;
      for (const MixedGraph& h : ts) kept = kept || cg_separates(h, t);
      REQUIRE_MESSAGE(kept, oracle::describe(g));
    }
  }
}
