#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "thinness/graph.hpp"

using namespace thinness;

TEST_CASE("edges are symmetric and counted once") {
  Graph g(70);
  g.add_edge(0, 69);
  g.add_edge(69, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 3);
  CHECK(g.adjacent(69, 0));
  CHECK(g.adjacent(0, 3));
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.neighbors(69) == std::vector<int>{0, 3});
  g.remove_edge(3, 69);
  CHECK_FALSE(g.adjacent(69, 3));
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(-1, 2), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 70), InputError);
}

TEST_CASE("names") {
  Graph g = Graph::from_edges(2, {{0, 1}});
  CHECK(g.name(1) == "1");
  g.set_names({"a", "b"});
  CHECK(g.find_name("b") == 1);
  CHECK(g.find_name("z") == -1);
  CHECK_THROWS_AS(g.set_names({"a"}), InputError);
}

TEST_CASE("induced subgraph keeps adjacency by position") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph h = induced_subgraph(g, {4, 0, 2});
  CHECK(h.n() == 3);
  CHECK(h.adjacent(0, 1));
  CHECK_FALSE(h.adjacent(1, 2));
  CHECK_FALSE(h.adjacent(0, 2));
  CHECK_THROWS_AS(induced_subgraph(g, {0, 0}), InputError);
  CHECK_THROWS_AS(induced_subgraph(g, {7}), InputError);
}

TEST_CASE("bipartite half keeps only cross edges") {
  Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {2, 3}, {1, 3}});
  Graph h = bipartite_half(g, {0, 1}, {2, 3});
  CHECK(h.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK_THROWS_AS(bipartite_half(g, {0, 1}, {1, 2}), InputError);
}

TEST_CASE("topological sort: smallest-first order or a real cycle") {
  Digraph d(4);
  d.add_arc(2, 0);
  d.add_arc(0, 1);
  d.add_arc(3, 1);
  TopoResult t = topological_sort(d);
  REQUIRE(t.acyclic);
  CHECK(t.order.seq == std::vector<int>{2, 0, 3, 1});

  d.add_arc(1, 2);
  t = topological_sort(d);
  REQUIRE_FALSE(t.acyclic);
  REQUIRE(t.cycle.size() >= 3);
  CHECK(t.cycle.front() == t.cycle.back());
  for (std::size_t i = 0; i + 1 < t.cycle.size(); ++i) CHECK(d.has_arc(t.cycle[i], t.cycle[i + 1]));
}

TEST_CASE("topological sort agrees with the sink-stripping oracle") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Digraph d(n);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng() % 5 == 0) {
          d.add_arc(u, v);
          arcs.emplace_back(u, v);
        }
    TopoResult t = topological_sort(d);
    CHECK(t.acyclic == oracle::acyclic(n, arcs));
    if (t.acyclic) {
      std::vector<int> pos(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) pos[t.order.seq[i]] = i;
      for (auto [u, v] : arcs) CHECK(pos[u] < pos[v]);
    }
  }
}

TEST_CASE("connected labeled graph counts") {
  const std::size_t expected[] = {1, 1, 1, 4, 38, 728, 26704};
  for (int n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    std::set<std::vector<Edge>> seen;
    for_each_graph(n, true, [&](const Graph& g) {
      ++count;
      CHECK(is_connected(g));
      seen.insert(g.edges());
    });
    CHECK(count == expected[n]);
    CHECK(seen.size() == count);
  }
  CHECK(enumerate_connected_graphs(4).size() == 38);
  std::size_t all5 = 0;
  for_each_graph(5, false, [&](const Graph&) { ++all5; });
  CHECK(all5 == 1024);
}

TEST_CASE("bipartition, components, complement") {
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(bipartition(c5).empty());
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto col = bipartition(p4);
  REQUIRE(col.size() == 4);
  for (auto [u, v] : p4.edges()) CHECK(col[u] != col[v]);
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(connected_components(two).size() == 2);
  CHECK_FALSE(is_connected(two));
  CHECK(complement(two).edge_count() == 4);
  Graph r = relabel(p4, {3, 2, 1, 0});
  CHECK(r.same_edges(p4));
}

TEST_CASE("partition helpers") {
  Partition p = compact_partition({5, 2, 5, 9});
  CHECK(p.k == 3);
  CHECK(p.class_of == std::vector<int>{0, 1, 0, 2});
  CHECK(p.classes() == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
  Partition bad{{0, 2}, 3};
  CHECK_THROWS_AS(validate_partition(bad, 2), InputError);
  CHECK_THROWS_AS(validate_order(VertexOrder{{0, 0}}, 2), InputError);
  CHECK_THROWS_AS(validate_order(VertexOrder{{0}}, 2), InputError);
  CHECK_NOTHROW(validate_representation(Representation{VertexOrder::identity(2), Partition::single(2)}, 2));
}

TEST_CASE("random graphs are reproducible") {
  std::mt19937_64 a(3), b(3);
  CHECK(random_connected_graph(8, 0.3, a).same_edges(random_connected_graph(8, 0.3, b)));
  std::mt19937_64 c(4);
  for (int i = 0; i < 20; ++i) CHECK(is_connected(random_connected_graph(7, 0.2, c)));
}
