#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "imsets/error.hpp"
#include "oracles.hpp"

using namespace imsets;
using fx::graph;
using fx::set;

TEST_CASE("vertex sets") {
  const VertexSet s = VertexSet::singleton(0).with(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK((s - VertexSet::singleton(0)) == VertexSet::singleton(3));
  CHECK(VertexSet::first_n(32).size() == 32);
  int visited = 0;
  for_each_subset(s, [&](VertexSet) { ++visited; });
  CHECK(visited == 4);
}

TEST_CASE("labels are sorted and capped") {
  Labels l({"c", "a", "b", "a"});
  CHECK(l.size() == 3);
  CHECK(l.name(0) == "a");
  CHECK(l.format(l.parse_set("{c,a}")) == "{a,c}");
  CHECK(l.format(VertexSet{}) == "{}");
  CHECK_THROWS_AS(l.index("z"), InvalidArgument);
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(Labels{many}, InvalidArgument);
}

TEST_CASE("classify") {
  CHECK(classify(graph("vertex a\nvertex b\nvertex c\nedge a -- b\nedge b -- c\nedge a -- c\n")) == GraphKind::UG);
  CHECK(classify(graph("vertex a\nvertex b\nvertex c\nedge a -> b\nedge b -> c\nedge c -> a\n")) == GraphKind::NotCG);
  CHECK(classify(graph("vertex a\nvertex c\nvertex d\nvertex e\nedge a -> d\nedge d -- e\nedge e -- c\nedge c -> a\n")) ==
        GraphKind::NotCG);
  CHECK(classify(graph(fx::kClosureC4)) == GraphKind::CGProper);
  CHECK(classify(graph("vertex a\nvertex b\nedge a -> b\n")) == GraphKind::DAG);
  CHECK(std::string(to_string(GraphKind::NotCG)) == "NOT-CG");
}

TEST_CASE("classify agrees with level-assignment search on every 3- and 4-vertex mixed graph") {
  for (int n : {3, 4}) {
    const LabelsPtr labels = letter_labels(n);
    std::vector<Edge> ps;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
    std::size_t total = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      MixedGraph::Builder b(labels, labels->all());
      std::size_t c = code;
      for (auto [i, j] : ps) {
        if (c % 4 == 1) b.add_undirected(i, j);
        if (c % 4 == 2) b.add_directed(i, j);
        if (c % 4 == 3) b.add_directed(j, i);
        c /= 4;
      }
      const MixedGraph g = std::move(b).build();
      REQUIRE(g.is_chain_graph() == oracle::is_chain_graph(g));
      CHECK(classify(underlying(g)) == GraphKind::UG);
      if (!g.is_chain_graph()) CHECK_THROWS_AS(chain_components(g), InvalidArgument);
    }
  }
}

TEST_CASE("chain components") {
  const MixedGraph g = graph(fx::kClosureC4);
  const auto comps = chain_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == set(g, "a"));
  CHECK(comps[1] == set(g, "b"));
  CHECK(comps[2] == set(g, "c,d"));

  const MixedGraph h = graph(fx::kFig1);
  CHECK(chain_components(h) == std::vector<VertexSet>{h.vertices()});

  const MixedGraph dag = graph("vertex a\nvertex b\nvertex c\nedge b -> c\nedge a -> b\n");
  CHECK(chain_components(dag) == std::vector<VertexSet>{set(dag, "a"), set(dag, "b"), set(dag, "c")});
}

TEST_CASE("chain components partition and order every 4-vertex chain graph") {
  for (const MixedGraph& g : oracle::all_chain_graphs(4)) {
    const auto comps = chain_components(g);
    VertexSet seen;
    std::vector<int> rank(4);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      CHECK_FALSE(seen.intersects(comps[i]));
      seen |= comps[i];
      for (int v : comps[i]) rank[v] = static_cast<int>(i);
    }
    CHECK(seen == g.vertices());
    for (auto [a, b] : g.directed_edges()) CHECK(rank[a] < rank[b]);
  }
}

TEST_CASE("parents and ancestors") {
  const MixedGraph g = graph(fx::kClosureC4);
  CHECK(parents(g, set(g, "c,d")) == set(g, "a,b"));
  CHECK(parents(g, g.vertices()).empty());
  CHECK(parents(graph(fx::kFig1), set(graph(fx::kFig1), "a,b")).empty());
  CHECK(ancestral_set(g, set(g, "d")) == g.vertices());
  CHECK(ancestral_set(g, VertexSet{}).empty());
  const MixedGraph e = graph("vertex a\nvertex b\n");
  CHECK(ancestral_set(e, set(e, "a")) == set(e, "a"));
}

TEST_CASE("ancestral sets are monotone and idempotent; parents exclude the set") {
  for (const MixedGraph& g : oracle::all_chain_graphs(3)) {
    for_each_subset(g.vertices(), [&](VertexSet s) {
      const VertexSet an = ancestral_set(g, s);
      CHECK(s.subset_of(an));
      CHECK(ancestral_set(g, an) == an);
      CHECK_FALSE(parents(g, s).intersects(s));
      for_each_subset(g.vertices(), [&](VertexSet t) {
        if (s.subset_of(t)) CHECK(an.subset_of(ancestral_set(g, t)));
      });
    });
  }
}

TEST_CASE("induced subgraphs, underlying graphs and cliques") {
  const MixedGraph arrow = graph("vertex a\nvertex b\nedge a -> b\n");
  CHECK(underlying(arrow) == graph("vertex a\nvertex b\nedge a -- b\n"));
  const MixedGraph tri = graph("vertex a\nvertex b\nvertex c\nedge a -- b\nedge b -- c\nedge a -- c\n");
  CHECK(is_clique(tri, tri.vertices()));
  CHECK(is_clique(tri, VertexSet{}));
  const MixedGraph c4 = oracle::cycle(4);
  CHECK_FALSE(is_clique(c4, set(c4, "a,c")));
  CHECK(is_clique(c4, set(c4, "a")));
  const MixedGraph sub = induced_subgraph(graph(fx::kFig3), set(graph(fx::kFig3), "c,d,e"));
  CHECK(sub.edge_count() == 3);
  CHECK_THROWS_AS(is_clique(c4, VertexSet::singleton(7)), InvalidArgument);
  CHECK_THROWS_AS(induced_subgraph(c4, VertexSet::singleton(7)), InvalidArgument);
}

TEST_CASE("graph text format") {
  CHECK_THROWS_WITH_AS(parse_graph("vertex a\nvertex b\nedge a -- b\nedge b -- a\n"), doctest::Contains("line 4"),
                       InvalidArgument);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a -- a\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a -- z\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex a\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a -> b\nedge b -> a\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a -> b\nedge a -- b\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("node a\n"), InvalidArgument);
  const MixedGraph g = parse_graph("# comment\n\nvertex x\nvertex y # trailing\nedge y -> x\n");
  CHECK(g.has_directed(g.labels().index("y"), g.labels().index("x")));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const MixedGraph h = oracle::random_cg(5, rng);
    CHECK(parse_graph(format_graph(h)) == h);
  }
}

TEST_CASE("triplets") {
  const MixedGraph g = graph(fx::kFig1);
  CHECK_THROWS_AS(Triplet::make(VertexSet{}, set(g, "a"), VertexSet{}), InvalidArgument);
  CHECK_THROWS_AS(Triplet::make(set(g, "a"), set(g, "a,b"), VertexSet{}), InvalidArgument);
  const Triplet t = fx::trip(g, "c,b|a|e");
  CHECK(t.canonical().a == set(g, "a"));
  CHECK(format_triplet(g.labels(), t) == "<b,c|a|e>");
  CHECK(fx::trip(g, "a|b|").c.empty());
}
