#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "thinness/fixtures.hpp"
#include "thinness/ordering.hpp"

using namespace thinness;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }  // a-b-c
Graph c4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

oracle::Matrix as_matrix(const Graph& h) { return oracle::adjacency(h); }

// Every class assignment with at most k classes, as a vector per vertex.
void each_assignment(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  for (;;) {
    fn(cls);
    int i = 0;
    while (i < n && ++cls[i] == k) cls[i++] = 0;
    if (i == n) return;
  }
}

// Sides are 0..a-1 and a..a+b-1.
bool one_side_in_one_class(int a, int b, const std::vector<int>& seq, const std::vector<int>& cls) {
  std::vector<int> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
  auto side_ok = [&](int lo, int hi) {
    int greatest = lo;
    for (int v = lo; v < hi; ++v)
      if (pos[v] > pos[greatest]) greatest = v;
    int c = -1;
    for (int v = lo; v < hi; ++v) {
      if (v == greatest) continue;
      if (c >= 0 && cls[v] != c) return false;
      c = cls[v];
    }
    return true;
  };
  return side_ok(0, a) || side_ok(a, a + b);
}

}  // namespace

TEST_CASE("kind names") {
  for (const char* s : {"thin", "pthin", "indthin", "indpthin"}) CHECK(ThinnessKind::parse(s).name() == s);
  CHECK_THROWS_AS(ThinnessKind::parse("PTHIN"), InputError);
  CHECK(parse_mode("strong") == ConsistencyMode::strong);
  CHECK(to_string(ConsistencyMode::consistent) == "consistent");
}

TEST_CASE("consistency: worked examples") {
  // c sees b but not a, and a precedes b in the class.
  Representation rep{VertexOrder{{1, 0, 2}}, Partition::single(3)};
  ConsistencyReport r = is_consistent(p3(), rep, ConsistencyMode::consistent);
  REQUIRE_FALSE(r.ok);
  CHECK(r.witness->triple == std::array<int, 3>{1, 0, 2});
  CHECK(is_consistent(p3(), Representation{VertexOrder{{0, 2, 1}}, Partition::single(3)}, ConsistencyMode::consistent).ok);
  CHECK_FALSE(r.witness->reverse);

  Graph k5(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  Representation any{VertexOrder{{3, 1, 4, 0, 2}}, Partition::single(5)};
  CHECK(is_consistent(k5, any, ConsistencyMode::strong).ok);

  CHECK_THROWS_AS(is_consistent(p3(), Representation{VertexOrder{{0, 1}}, Partition::single(3)},
                                ConsistencyMode::consistent),
                  InputError);
}

TEST_CASE("consistency agrees with the triple oracle and witnesses are real") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 2000; ++it) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.5, rng);
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int& c : cls) c = static_cast<int>(rng() % static_cast<unsigned>(k));
    Representation rep{random_order(n, rng), compact_partition(cls)};
    for (ConsistencyMode mode : {ConsistencyMode::consistent, ConsistencyMode::strong}) {
      const bool strong = mode == ConsistencyMode::strong;
      ConsistencyReport r = is_consistent(g, rep, mode);
      CHECK(r.ok == oracle::consistent(g, rep.order.seq, rep.partition.class_of, strong));
      if (r.ok) continue;
      REQUIRE(r.witness);
      const auto [a, b, c] = r.witness->triple;
      const auto pos = rep.order.positions();
      CHECK(pos[a] < pos[b]);
      CHECK(pos[b] < pos[c]);
      const auto& cl = rep.partition.class_of;
      if (!r.witness->reverse) {
        CHECK(cl[a] == cl[b]);
        CHECK(g.adjacent(c, a));
        CHECK_FALSE(g.adjacent(c, b));
      } else {
        CHECK(strong);
        CHECK(cl[b] == cl[c]);
        CHECK(g.adjacent(a, c));
        CHECK_FALSE(g.adjacent(a, b));
      }
    }
  }
}

TEST_CASE("conflict graph: worked examples") {
  CHECK(conflict_graph(p3(), VertexOrder::identity(3), ConsistencyMode::consistent).edge_count() == 0);
  Graph h = conflict_graph(c4(), VertexOrder::identity(4), ConsistencyMode::consistent);
  CHECK(h.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("conflict graph agrees with the definition; consistent edges are strong edges") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.45, rng);
    VertexOrder o = random_order(n, rng);
    Graph a = conflict_graph(g, o, ConsistencyMode::consistent);
    Graph b = conflict_graph(g, o, ConsistencyMode::strong);
    CHECK(as_matrix(a) == oracle::conflicts(g, o.seq, false));
    CHECK(as_matrix(b) == oracle::conflicts(g, o.seq, true));
    for (auto [u, v] : a.edges()) CHECK(b.adjacent(u, v));
  }
}

TEST_CASE("a partition is consistent iff it colours the conflict graph (exhaustive, n <= 5)") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, false, [&](const Graph& g) {
      if (rng() % 8) return;
      VertexOrder o = random_order(n, rng);
      for (ConsistencyMode mode : {ConsistencyMode::consistent, ConsistencyMode::strong}) {
        Graph h = conflict_graph(g, o, mode);
        each_assignment(n, 3, [&](const std::vector<int>& cls) {
          bool colours = true;
          for (auto [u, v] : h.edges()) colours = colours && cls[u] != cls[v];
          CHECK(colours == oracle::consistent(g, o.seq, cls, mode == ConsistencyMode::strong));
        });
      }
    });
}

TEST_CASE("clique number and minimum colouring against brute force") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 500; ++it) {
    const int n = static_cast<int>(rng() % 10);
    Graph h = random_graph(n, 0.5, rng);
    const auto m = as_matrix(h);
    CHECK(clique_number(h) == oracle::clique_number(m));
    std::vector<int> col = min_coloring(h, VertexOrder::identity(n).seq);
    REQUIRE(static_cast<int>(col.size()) == n);
    for (auto [u, v] : h.edges()) CHECK(col[u] != col[v]);
    const int used = n ? *std::max_element(col.begin(), col.end()) + 1 : 0;
    CHECK(used == oracle::chromatic_number(m));
  }
}

TEST_CASE("min classes for an order") {
  Partition a = min_classes_for_order(p3(), VertexOrder::identity(3), ConsistencyMode::consistent, false);
  CHECK(a.k == 1);
  Partition b = min_classes_for_order(c4(), VertexOrder::identity(4), ConsistencyMode::consistent, false);
  CHECK(b.k == 2);
  // K_{2,2} with sides {0,1} and {2,3}.
  Graph k22 = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  Partition c = min_classes_for_order(k22, VertexOrder::identity(4), ConsistencyMode::strong, true);
  CHECK(c.k == 2);

  std::mt19937_64 rng(15);
  for (int it = 0; it < 600; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.5, rng);
    VertexOrder o = random_order(n, rng);
    for (bool strong : {false, true})
      for (bool indep : {false, true}) {
        Partition p = min_classes_for_order(g, o, strong ? ConsistencyMode::strong : ConsistencyMode::consistent, indep);
        CHECK(oracle::consistent(g, o.seq, p.class_of, strong));
        if (indep) CHECK(oracle::classes_independent(g, p.class_of));
        auto h = oracle::conflicts(g, o.seq, strong);
        if (indep)
          for (auto [u, v] : g.edges()) h[u][v] = h[v][u] = 1;
        CHECK(p.k == std::max(1, oracle::chromatic_number(h)));
      }
  }
}

TEST_CASE("lowest colour first makes min_classes_for_order deterministic") {
  Graph g = c4();
  Partition p = min_classes_for_order(g, VertexOrder::identity(4), ConsistencyMode::consistent, false);
  CHECK(p.class_of == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("certificate verification") {
  Graph g = p3();
  Representation good{VertexOrder{{0, 1, 2}}, Partition::single(3)};
  CHECK(verify_certificate(g, good, ThinnessKind::pthin()));
  CHECK_FALSE(verify_certificate(g, good, ThinnessKind::indthin()));
  CertificateCheck c = check_certificate(g, Representation{VertexOrder{{1, 0, 2}}, Partition::single(3)},
                                         ThinnessKind::thin());
  CHECK_FALSE(c.ok);
  CHECK(c.witness.has_value());
  Representation indep{VertexOrder{{0, 1, 2}}, Partition{{0, 1, 0}, 2}};
  CHECK(verify_certificate(g, indep, ThinnessKind::indpthin()));

  Fixture f = fig1a();
  REQUIRE(f.certificate);
  CHECK(verify_certificate(f.graph, *f.certificate, ThinnessKind::thin()));
  CHECK(f.certificate->partition.k == 2);
  CertificateCheck strong = check_certificate(f.graph, *f.certificate, ThinnessKind::pthin());
  REQUIRE_FALSE(strong.ok);
  REQUIRE(strong.witness);
  CHECK(strong.witness->reverse);
}

TEST_CASE("random consistent instances are consistent") {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % 3);
    const bool indep = rng() % 2;
    RandomInstance in = random_consistent_instance(n, k, indep, rng);
    CHECK(oracle::consistent(in.graph, in.rep.order.seq, in.rep.partition.class_of, false));
    if (indep) CHECK(oracle::classes_independent(in.graph, in.rep.partition.class_of));
    if (n >= k) CHECK(in.rep.partition.k == k);
  }
}

// In every consistent partition into at most two classes of a complete bipartite graph, some
// side has all its vertices but possibly its greatest one in a single class.
TEST_CASE("complete bipartite 2-thin representations put one side in one class") {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      if (a + b > 7) continue;
      Graph g(a + b);
      for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
      std::vector<int> seq = oracle::identity(a + b);
      int reps = 0;
      do {
        auto h = oracle::conflicts(g, seq, false);
        each_assignment(a + b, 2, [&](const std::vector<int>& cls) {
          for (int u = 0; u < a + b; ++u)
            for (int v = u + 1; v < a + b; ++v)
              if (h[u][v] && cls[u] == cls[v]) return;
          ++reps;
          CHECK(one_side_in_one_class(a, b, seq, cls));
        });
      } while (std::next_permutation(seq.begin(), seq.end()));
      CHECK(reps > 0);
    }

  // K_{4,4}: certificates from the solver.
  Graph k44(8);
  for (int u = 0; u < 4; ++u)
    for (int v = 4; v < 8; ++v) k44.add_edge(u, v);
  ThinnessResult r = exact_thinness(k44, ThinnessKind::thin());
  REQUIRE(r.exact);
  CHECK(r.value == 2);
  CHECK(one_side_in_one_class(4, 4, r.certificate.order.seq, r.certificate.partition.class_of));
}
