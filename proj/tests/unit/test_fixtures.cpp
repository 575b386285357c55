#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "thinness/bounds.hpp"
#include "thinness/fixtures.hpp"
#include "thinness/patterns.hpp"

using namespace thinness;

namespace {

// Backtracking search for a copy of h in g; extra edges among the image are allowed.
bool contains_subgraph(const Graph& g, const Graph& h) {
  const int n = h.n();
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < g.n(); ++c) {
      if (used[c]) continue;
      bool fits = true;
      for (int j = 0; j < i && fits; ++j) fits = !h.adjacent(i, j) || g.adjacent(c, map[j]);
      if (!fits) continue;
      map[i] = c, used[c] = 1;
      if (place(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return place(0);
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int parameter(const Graph& g, const std::string& kind) {
  ThinnessKind k = kind == "thin" ? ThinnessKind::thin()
                   : kind == "pthin" ? ThinnessKind::pthin()
                   : kind == "indthin" ? ThinnessKind::indthin()
                                       : ThinnessKind::indpthin();
  if (g.n() <= 7) return oracle::thinness(g, k.proper, k.independent);
  ThinnessResult r = exact_thinness(g, k);
  REQUIRE(r.exact);
  return r.value;
}

// Recomputes one checked fact from scratch.
void check_fact(const Fixture& f, const KnownFact& fact) {
  INFO(f.name << " " << fact.property << " = " << fact.value);
  const Graph& g = f.graph;
  const std::string& p = fact.property;
  if (p == "thin" || p == "pthin" || p == "indthin" || p == "indpthin") {
    CHECK(std::to_string(parameter(g, p)) == fact.value);
  } else if (p == "thin_at_most") {
    REQUIRE(f.certificate);
    CHECK(verify_certificate(g, *f.certificate, f.certificate_kind));
    CHECK(f.certificate->partition.k <= std::stoi(fact.value));
  } else if (p == "model_reproduces_graph") {
    REQUIRE(f.boxes);
    CHECK(intersection_graph(*f.boxes).same_edges(g));
  } else if (p == "diagonal") {
    REQUIRE(f.boxes);
    CHECK(to_string(check_diagonal(*f.boxes).label) == fact.value);
  } else if (p == "blocking") {
    REQUIRE(f.boxes);
    CHECK((check_blocking(*f.boxes).ok ? "true" : "false") == fact.value);
  } else if (p == "iso_peak_at_least") {
    CHECK(oracle::iso_peak(g) >= std::stoi(fact.value));
  } else if (p == "diameter") {
    CHECK(std::to_string(oracle::diameter(g)) == fact.value);
  } else if (p == "contains_grid") {
    CHECK(contains_subgraph(g, grid(std::stoi(fact.value)).graph));
  } else if (p == "max_degree") {
    CHECK(std::to_string(max_degree(g)) == fact.value);
  } else if (p == "avoids_P34") {
    CHECK((oracle::member(g, parse_family("P34").patterns) ? "true" : "false") == fact.value);
  } else {
    FAIL("no checker for fact " << p);
  }
}

}  // namespace

TEST_CASE("fig1 graphs are pinned") {
  CHECK(fig1a().graph.n() == 15);
  CHECK(graph_checksum(fig1a().graph) == 2595805876922247180ULL);
  CHECK(graph_checksum(fig1b().graph) == 9280452019698749223ULL);
  CHECK(graph_checksum(fig1a().graph) != graph_checksum(fig1b().graph));
}

TEST_CASE("checked facts hold") {
  std::vector<Fixture> all = {fig1a(),          fig1b(),    g72(),           grid(2),
                              grid(3),          grid(4),    b0vpg_grid(2),   b0vpg_grid(3),
                              complete_bipartite(3, 3), wheel4(), subdivided_k5(), cycle(5),
                              cycle(6),         bipartite_claw(), octahedron()};
  int checked = 0, cited = 0;
  for (const Fixture& f : all)
    for (const KnownFact& fact : f.facts) {
      CHECK((fact.tag == "checked" || fact.tag == "unverified-citation"));
      if (fact.tag == "checked") {
        check_fact(f, fact);
        ++checked;
      } else {
        ++cited;
      }
    }
  CHECK(checked > 20);
  CHECK(cited >= 2);
}

TEST_CASE("stored certificates and models verify") {
  for (const std::string& name : {"fig1a", "fig1b", "g72", "subdivided_k5"}) {
    Fixture f = make_fixture(name);
    if (f.certificate) CHECK_MESSAGE(verify_certificate(f.graph, *f.certificate, f.certificate_kind), name);
    if (f.boxes) CHECK(intersection_graph(*f.boxes).same_edges(f.graph));
  }
  Fixture b = b0vpg_grid(3);
  CHECK(path_intersection_graph(*b.paths).same_edges(b.graph));
}

TEST_CASE("make_fixture parses specs") {
  CHECK(make_fixture("cycle:7").graph.n() == 7);
  CHECK(make_fixture("complete_bipartite:2,3").graph.edge_count() == 6);
  CHECK(make_fixture("grid:3").graph.n() == 9);
  CHECK(make_fixture("octahedron").graph.edge_count() == 12);
  CHECK(make_fixture("fig1a").fact("thin") == std::optional<std::string>("2"));
  CHECK_FALSE(make_fixture("fig1a").fact("nonsense"));
  CHECK_THROWS_AS(make_fixture("nonsense"), InputError);
  CHECK_THROWS_AS(make_fixture("cycle:2"), InputError);
  CHECK_THROWS_AS(make_fixture("cycle:x"), InputError);
  CHECK_THROWS_AS(make_fixture("complete_bipartite:3"), InputError);
  CHECK(fixture_names().size() == 11);
}
