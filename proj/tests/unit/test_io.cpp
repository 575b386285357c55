#include <sstream>

#include "doctest.h"
#include "thinness/ceo.hpp"
#include "thinness/graph_io.hpp"

using namespace thinness;

TEST_CASE("text format round trip with comments") {
  const std::string text = "# a path\n4 3\n0 1\n\n1 2 # trailing text ignored\n# mid comment\n2 3\n";
  Graph g = parse_graph(text);
  CHECK(g.n() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  std::ostringstream out;
  write_graph_text(out, g);
  CHECK(out.str() == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(parse_graph(out.str()).same_edges(g));
}

TEST_CASE("json format round trip keeps names") {
  Graph g = Graph::from_edges(3, {{0, 2}});
  g.set_names({"x", "y", "z"});
  nlohmann::json j = graph_to_json(g);
  CHECK(j.dump() == R"({"edges":[[0,2]],"n":3,"names":["x","y","z"]})");
  Graph h = parse_graph(j.dump());
  CHECK(h.same_edges(g));
  CHECK(h.names() == g.names());
}

TEST_CASE("malformed graphs are input errors") {
  CHECK_THROWS_AS(parse_graph(""), InputError);
  CHECK_THROWS_AS(parse_graph("3"), InputError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\nzero one\n"), InputError);
  CHECK_THROWS_AS(parse_graph("-1 0\n"), InputError);
  CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"edges\": [[0, 2]]}"), InputError);
  CHECK_THROWS_AS(parse_graph("{\"edges\": []}"), InputError);
  CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"edges\": [[0]]}"), InputError);
  CHECK_THROWS_AS(parse_graph("{\"n\": 2, "), InputError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("duplicate edges collapse") {
  Graph g = parse_graph("2 2\n0 1\n1 0\n");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("certificate json") {
  Representation rep{VertexOrder{{2, 0, 1}}, Partition{{0, 1, 0}, 2}};
  nlohmann::json j = certificate_to_json(rep, ThinnessKind::pthin());
  CHECK(j.dump() == R"({"classes":[0,1,0],"k":2,"kind":"pthin","order":[2,0,1]})");
  ThinnessKind kind;
  Representation back = certificate_from_json(j, &kind);
  CHECK(kind == ThinnessKind::pthin());
  CHECK(back.order.seq == rep.order.seq);
  CHECK(back.partition.class_of == rep.partition.class_of);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"order":[0]})")), InputError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"order":[0,1],"classes":[0,0],"k":2})")),
                  InputError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"order":[0],"classes":[0],"kind":"wide"})")),
                  InputError);
}

TEST_CASE("ceo instance json round trip") {
  CeoInstance inst;
  inst.graph = Graph::from_edges(3, {{0, 1}});
  inst.partition = Partition{{0, 1, 0}, 2};
  inst.porder.class_orders = {{2, 0}, {1}};
  inst.mode = ConsistencyMode::strong;
  CeoInstance back = ceo_instance_from_json(nlohmann::json::parse(ceo_instance_to_json(inst).dump()));
  CHECK(back.graph.same_edges(inst.graph));
  CHECK(back.porder.class_orders == inst.porder.class_orders);
  CHECK(back.mode == ConsistencyMode::strong);
  auto bad = ceo_instance_to_json(inst);
  bad["class_orders"] = {{2, 0}, {0}};
  CHECK_THROWS_AS(ceo_instance_from_json(bad), InputError);
  bad = ceo_instance_to_json(inst);
  bad["class_orders"] = {{2}, {1}};
  CHECK_THROWS_AS(ceo_instance_from_json(bad), InputError);
}
