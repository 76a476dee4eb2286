#include <doctest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "imsets/error.hpp"
#include "imsets/separation.hpp"
#include "oracles.hpp"

using namespace imsets;
using fx::graph;
using fx::set;
using fx::trip;

TEST_CASE("undirected separation") {
  const MixedGraph h = graph(fx::kFig1);
  CHECK(ug_separates(h, trip(h, "b|e|a,c,d")));
  const MixedGraph two = graph("vertex a\nvertex b\nvertex c\nvertex d\nedge a -- b\nedge c -- d\n");
  CHECK(ug_separates(two, trip(two, "a,b|c,d|")));
  const MixedGraph c4 = oracle::cycle(4);
  CHECK_FALSE(ug_separates(c4, trip(c4, "a|c|b")));
  CHECK_THROWS_AS(ug_separates(c4, Triplet{VertexSet::singleton(0), VertexSet::singleton(9), {}}), InvalidArgument);
}

TEST_CASE("undirected separation agrees with transitive closure") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const MixedGraph g = oracle::random_ug(5, rng);
    for (const Triplet& t : all_triplets(g.vertices())) REQUIRE(ug_separates(g, t) == oracle::separated(g, t));
  }
}

TEST_CASE("moral graph") {
  const MixedGraph g = graph(fx::kClosureC4);
  const MixedGraph m = moral_graph(g);
  CHECK(m == graph("vertex a\nvertex b\nvertex c\nvertex d\nedge a -- b\nedge a -- c\nedge b -- d\nedge c -- d\n"));
  const MixedGraph h = graph(fx::kFig3);
  CHECK(moral_graph(h) == h);
  CHECK(moral_graph(graph("vertex a\nvertex b\nedge a -> b\n")) == graph("vertex a\nvertex b\nedge a -- b\n"));
  CHECK_THROWS_AS(moral_graph(graph("vertex a\nvertex b\nvertex c\nedge a -> b\nedge b -> c\nedge c -> a\n")),
                  InvalidArgument);
}

TEST_CASE("moral graph marries exactly the parents of common chain components") {
  for (const MixedGraph& g : oracle::all_chain_graphs(4)) {
    const MixedGraph m = moral_graph(g);
    const auto comps = chain_components(g);
    for (int a : g.vertices()) {
      for (int b : g.vertices()) {
        if (a >= b) continue;
        bool married = false;
        for (VertexSet c : comps) {
          const VertexSet pa = parents(g, c);
          married = married || (pa.contains(a) && pa.contains(b));
        }
        CHECK(m.has_undirected(a, b) == (g.is_adjacent(a, b) || married));
      }
    }
  }
}

TEST_CASE("chain graph separation") {
  const MixedGraph g = graph(fx::kClosureC4);
  CHECK(cg_separates(g, trip(g, "a|b|")));
  CHECK_FALSE(cg_separates(g, trip(g, "a|b|c,d")));
  for_each_subset(set(g, "b,d"), [&](VertexSet c) { CHECK_FALSE(cg_separates(g, Triplet{set(g, "a"), set(g, "c"), c})); });
}

TEST_CASE("chain graph separation: UG reduction, symmetry, shrinking A or B") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const MixedGraph u = oracle::random_ug(5, rng);
    const MixedGraph g = oracle::random_cg(5, rng);
    for (const Triplet& t : all_triplets(g.vertices())) {
      REQUIRE(cg_separates(u, t) == ug_separates(u, t));
      const bool s = cg_separates(g, t);
      REQUIRE(s == cg_separates(g, Triplet{t.b, t.a, t.c}));
      if (s && t.a.size() > 1)
        for (int x : t.a) CHECK(cg_separates(g, Triplet{t.a.without(x), t.b, t.c}));
    }
  }
}

TEST_CASE("complexes") {
  const MixedGraph g = graph(fx::kClosureC4);
  const auto cs = complexes(g);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].left == 0);
  CHECK(cs[0].right == 1);
  CHECK(cs[0].path == std::vector<int>{2, 3});

  const MixedGraph v = graph("vertex a\nvertex b\nvertex c\nedge a -> c\nedge b -> c\n");
  REQUIRE(complexes(v).size() == 1);
  CHECK(complexes(v)[0].path == std::vector<int>{2});
  CHECK(complexes(graph(fx::kFig3)).empty());

  // Shielded: a and b adjacent, so no complex.
  CHECK(complexes(graph("vertex a\nvertex b\nvertex c\nedge a -> c\nedge b -> c\nedge a -> b\n")).empty());
  // a -> d makes a->c--d<-b non-induced; a->d<-b remains.
  const auto chorded =
      complexes(graph("vertex a\nvertex b\nvertex c\nvertex d\nedge a -> c\nedge b -> d\nedge c -- d\nedge a -> d\n"));
  REQUIRE(chorded.size() == 1);
  CHECK(chorded[0].path == std::vector<int>{3});
}

TEST_CASE("Frydenberg equivalence") {
  const MixedGraph arrow = graph("vertex a\nvertex b\nedge a -> b\n");
  const MixedGraph line = graph("vertex a\nvertex b\nedge a -- b\n");
  CHECK(frydenberg_equivalent(arrow, line));
  const MixedGraph v = graph("vertex a\nvertex b\nvertex c\nedge a -> c\nedge b -> c\n");
  const MixedGraph path = graph("vertex a\nvertex b\nvertex c\nedge a -- c\nedge b -- c\n");
  CHECK_FALSE(frydenberg_equivalent(v, path));
  CHECK(frydenberg_equivalent(v, v));
  CHECK_THROWS_AS(frydenberg_equivalent(v, arrow), InvalidArgument);
}

TEST_CASE("Frydenberg classes coincide with independence-model classes on 4 vertices") {
  const auto gs = oracle::all_chain_graphs(4);
  std::map<std::vector<bool>, int> model_class;
  std::map<std::pair<std::vector<Edge>, std::vector<Complex>>, int> fry_class;
  std::map<int, int> model_to_fry;
  std::map<int, int> fry_to_model;
  for (const MixedGraph& g : gs) {
    const int m = model_class.emplace(oracle::model_bits(g), static_cast<int>(model_class.size())).first->second;
    const int f = fry_class.emplace(std::make_pair(underlying(g).undirected_edges(), complexes(g)),
                                    static_cast<int>(fry_class.size()))
                      .first->second;
    CHECK(model_to_fry.emplace(m, f).first->second == f);
    CHECK(fry_to_model.emplace(f, m).first->second == m);
  }
  CHECK(model_class.size() == fry_class.size());
  MESSAGE(gs.size() << " chain graphs, " << model_class.size() << " classes");
}

TEST_CASE("independence models") {
  const LabelsPtr l4 = letter_labels(4);
  CHECK(independence_model(complete_ug(l4, l4->all())).empty());
  const LabelsPtr l2 = letter_labels(2);
  const auto m = independence_model(edgeless(l2, l2->all()));
  REQUIRE(m.size() == 1);
  CHECK(m[0] == Triplet{VertexSet::singleton(0), VertexSet::singleton(1), {}});

  const MixedGraph h = graph(fx::kFig1);
  const auto model = independence_model(h);
  for (const char* t : {"b|e|a,c,d", "a|e|c,d", "b|d|a,c"})
    CHECK(std::find(model.begin(), model.end(), trip(h, t).canonical()) != model.end());

  CHECK(all_triplets(letter_labels(5)->all()).size() == 285);
  const LabelsPtr l9 = letter_labels(9);
  CHECK_THROWS_AS(independence_model(edgeless(l9, l9->all())), GuardExceeded);
}
