#include "thinness/fixtures.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace thinness {

namespace {

const char* const kChecked = "checked";
const char* const kUnverified = "unverified-citation";

// Fig. 1 layout: vertices listed bottom to top, left column class 0, right column class 1.
// Positional order (by height): l1 l2 r1 r2 l3 l4 l5 r3 l6 r4 l7 r5 l8 r6 l9.
struct Fig1Layout {
  std::vector<std::string> names;
  Representation rep;
};

Fig1Layout fig1_layout(const std::string& left, const std::string& right) {
  Fig1Layout out;
  for (int i = 1; i <= 9; ++i) out.names.push_back(left + std::to_string(i));
  for (int i = 1; i <= 6; ++i) out.names.push_back(right + std::to_string(i));
  const int l = 0, r = 9;
  out.rep.order.seq = {l + 0, l + 1, r + 0, r + 1, l + 2, l + 3, l + 4, r + 2,
                       l + 5, r + 3, l + 6, r + 4, l + 7, r + 5, l + 8};
  out.rep.partition.class_of.assign(15, 0);
  for (int i = 9; i < 15; ++i) out.rep.partition.class_of[static_cast<std::size_t>(i)] = 1;
  out.rep.partition.k = 2;
  return out;
}

Graph named_graph(const std::vector<std::string>& names, const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g(static_cast<int>(names.size()));
  g.set_names(names);
  for (const auto& [a, b] : edges) g.add_edge(g.find_name(a), g.find_name(b));
  return g;
}

}  // namespace

std::optional<std::string> Fixture::fact(const std::string& property) const {
  for (const KnownFact& f : facts)
    if (f.property == property) return f.value;
  return std::nullopt;
}

std::uint64_t graph_checksum(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n()));
  for (const auto& [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

Fixture fig1a() {
  Fig1Layout lay = fig1_layout("v", "w");
  Fixture f;
  f.name = "fig1a";
  f.description = "2-thin graph of proper thinness 3, with its 2-class representation";
  // Drawn edges, in the order they appear in the figure source.
  f.graph = named_graph(lay.names, {{"v4", "v3"}, {"v4", "v2"}, {"v4", "v1"}, {"v8", "v7"}, {"v8", "v6"},
                                    {"v8", "v5"}, {"w6", "w5"}, {"w6", "w4"}, {"w6", "w3"}, {"w1", "v2"},
                                    {"w1", "v3"}, {"w2", "v2"}, {"w2", "v3"}, {"v9", "w3"}, {"v9", "w4"},
                                    {"v9", "w5"}, {"v9", "w6"}, {"v9", "v8"}, {"v9", "v7"}, {"v9", "v6"},
                                    {"v9", "v5"}, {"v9", "v4"}, {"v9", "v3"}, {"v9", "v2"}, {"v9", "v1"}});
  f.certificate = lay.rep;
  f.certificate_kind = ThinnessKind::thin();
  f.facts = {{"thin", "2", kChecked}, {"pthin", "3", kChecked}};
  return f;
}

Fixture fig1b() {
  Fig1Layout lay = fig1_layout("x", "z");
  Fixture f;
  f.name = "fig1b";
  f.description = "proper 2-thin graph, with its 2-class representation";
  // The x9-x7 edge is drawn bent; it is still an edge.
  f.graph = named_graph(lay.names, {{"x4", "x3"}, {"x2", "x1"}, {"x4", "x5"}, {"x5", "x3"}, {"x8", "x7"},
                                    {"x8", "x6"}, {"x8", "x5"}, {"x7", "x6"}, {"x7", "x5"}, {"x6", "x5"},
                                    {"z6", "z5"}, {"z6", "z4"}, {"z5", "z4"}, {"z3", "z4"}, {"z1", "x2"},
                                    {"z1", "x3"}, {"z2", "x2"}, {"z2", "x3"}, {"x8", "z4"}, {"x7", "z4"},
                                    {"x8", "z5"}, {"x9", "z4"}, {"x9", "z5"}, {"x9", "z6"}, {"x9", "x8"},
                                    {"x9", "x7"}});
  f.certificate = lay.rep;
  f.certificate_kind = ThinnessKind::pthin();
  f.facts = {{"pthin", "2", kChecked}};
  return f;
}

Fixture g72() {
  Fixture f;
  f.name = "g72";
  f.description = "72-vertex graph with a non-blocking 2-diagonal box model and a 3-class representation";
  const int half = 36;
  // group[i] for the 1-based index i: 0 for odd i <= 32, k for even i in (8(k-1), 8k], 5 for i > 32
  auto group = [](int i) { return i > 32 ? 5 : (i % 2 ? 0 : (i + 7) / 8); };
  std::vector<std::string> names;
  for (int i = 1; i <= half; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= half; ++i) names.push_back("b" + std::to_string(i));
  Graph g(2 * half);
  g.set_names(names);
  auto a = [](int i) { return i - 1; };
  auto b = [&](int i) { return half + i - 1; };
  for (int i = 1; i <= half; ++i)
    for (int j = 1; j <= half; ++j) {
      const int gi = group(i), gj = group(j);
      bool e = false;
      if (gi >= 1 && gi <= 4) e = gj == gi || gj == 5;
      if (gi == 5) e = gj != 0;
      if (e) g.add_edge(a(i), b(j));
    }
  for (int k = 1; k <= 16; ++k) {
    g.add_edge(a(2 * k - 1), a(2 * k));
    g.add_edge(b(2 * k - 1), b(2 * k));
  }
  f.graph = g;

  BoxModel m;
  m.d1 = -2 * half;
  m.d2 = 2 * half;
  m.boxes.resize(static_cast<std::size_t>(2 * half));
  static const int floor_y[] = {0, 0, 17, 33, 49};  // doubled lower y for groups 1..4
  for (int i = 1; i <= half; ++i) {
    Box ba;
    ba.v = a(i);
    ba.cls = 2;
    ba.x2 = 2 * i;
    ba.y2 = 2 * (i + half);
    const int gi = group(i);
    if (gi == 0) {
      ba.x1 = 2 * i - 1;
      ba.y1 = 2 * (i + half) - 1;
    } else if (gi == 5) {
      ba.x1 = 2 * i - 1;
      ba.y1 = 0;
    } else {
      ba.x1 = 2 * i - 3;
      ba.y1 = floor_y[gi];
    }
    Box bb;
    bb.v = b(i);
    bb.cls = 1;
    bb.x1 = ba.y1;
    bb.y1 = ba.x1;
    bb.x2 = ba.y2;
    bb.y2 = ba.x2;
    m.boxes[static_cast<std::size_t>(ba.v)] = ba;
    m.boxes[static_cast<std::size_t>(bb.v)] = bb;
  }
  f.boxes = m;

  Representation rep;
  for (int k = 1; k <= half / 2; ++k)
    for (int v : {a(2 * k - 1), a(2 * k), b(2 * k - 1), b(2 * k)}) rep.order.seq.push_back(v);
  rep.partition.class_of.assign(static_cast<std::size_t>(2 * half), 0);
  for (int i = 1; i <= half; ++i) {
    const bool zero = group(i) == 0;
    rep.partition.class_of[static_cast<std::size_t>(a(i))] = zero ? 2 : 0;
    rep.partition.class_of[static_cast<std::size_t>(b(i))] = zero ? 2 : 1;
  }
  rep.partition.k = 3;
  f.certificate = rep;
  f.certificate_kind = ThinnessKind::thin();
  f.facts = {{"thin_at_most", "3", kChecked},
             {"model_reproduces_graph", "true", kChecked},
             {"diagonal", "two_diagonal", kChecked},
             {"blocking", "false", kChecked},
             {"thin", "3", kUnverified}};
  return f;
}

Fixture grid(int r) {
  if (r < 1 || r > 8) throw InputError("grid: r must be between 1 and 8");
  Fixture f;
  f.name = "grid:" + std::to_string(r);
  f.description = "r x r grid graph";
  Graph g(r * r);
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) names.push_back("g" + std::to_string(i) + "_" + std::to_string(j));
  g.set_names(names);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i + 1 < r) g.add_edge(i * r + j, (i + 1) * r + j);
      if (j + 1 < r) g.add_edge(i * r + j, i * r + j + 1);
    }
  f.graph = g;
  f.facts = {{"iso_peak_at_least", std::to_string(r), kChecked}, {"diameter", std::to_string(2 * (r - 1)), kChecked}};
  return f;
}

Fixture b0vpg_grid(int r) {
  if (r < 1 || r > 6) throw InputError("b0vpg_grid: r must be between 1 and 6");
  Fixture f;
  f.name = "b0vpg_grid:" + std::to_string(r);
  f.description = "intersection graph of overlapping unit grid segments (coordinates scaled by 10)";
  GridPathModel m;
  std::vector<std::string> names;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      GridPath p;
      p.v = static_cast<int>(m.paths.size());
      p.cls = 1;
      p.pts = {{10 * i - 1, 10 * j}, {10 * i + 11, 10 * j}};
      m.paths.push_back(p);
      names.push_back("h" + std::to_string(i) + "_" + std::to_string(j));
    }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      GridPath p;
      p.v = static_cast<int>(m.paths.size());
      p.cls = 2;
      p.pts = {{10 * i, 10 * j - 11}, {10 * i, 10 * j + 1}};
      m.paths.push_back(p);
      names.push_back("u" + std::to_string(i) + "_" + std::to_string(j));
    }
  f.graph = path_intersection_graph(m);
  f.graph.set_names(names);
  f.paths = m;
  f.facts = {{"contains_grid", std::to_string(r), kChecked}};
  if (r >= 2) f.facts.push_back({"max_degree", "6", kChecked});
  return f;
}

Fixture complete_bipartite(int a, int b) {
  if (a < 1 || b < 1 || a + b > 64) throw InputError("complete_bipartite: sides must be positive, total <= 64");
  Fixture f;
  f.name = "complete_bipartite:" + std::to_string(a) + "," + std::to_string(b);
  f.description = "complete bipartite graph";
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  f.graph = g;
  if (a >= 2 && b >= 2) f.facts = {{"pthin", "2", kChecked}, {"indpthin", "2", kChecked}};
  return f;
}

Fixture wheel4() {
  Fixture f;
  f.name = "wheel4";
  f.description = "4-cycle plus a universal vertex";
  f.graph = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  f.facts = {{"thin", "2", kChecked}, {"indpthin", "3", kChecked}};
  return f;
}

Fixture subdivided_k5() {
  static std::once_flag once;
  static Fixture cached;
  std::call_once(once, [] {
    Fixture f;
    f.name = "subdivided_k5";
    f.description = "K5 with every edge subdivided once";
    std::vector<Edge> edges;
    int next = 5;
    std::vector<std::string> names = {"k1", "k2", "k3", "k4", "k5"};
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        edges.push_back({i, next});
        edges.push_back({j, next});
        names.push_back("s" + std::to_string(i + 1) + std::to_string(j + 1));
        ++next;
      }
    f.graph = Graph::from_edges(next, edges);
    f.graph.set_names(names);
    Budget budget;
    budget.seconds = 30;
    ThinnessResult r = exact_thinness(f.graph, ThinnessKind::thin(), budget);
    f.certificate = r.certificate;
    f.certificate_kind = ThinnessKind::thin();
    f.facts = {{"thin_at_most", "4", kChecked}, {"vpg", "false", kUnverified}};
    cached = f;
  });
  return cached;
}

Fixture cycle(int n) {
  if (n < 3 || n > 64) throw InputError("cycle: n must be between 3 and 64");
  Fixture f;
  f.name = "cycle:" + std::to_string(n);
  f.description = "cycle graph";
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  f.graph = g;
  if (n >= 4) f.facts.push_back({"thin", "2", kChecked});
  if (n == 6) f.facts.push_back({"indthin", "3", kChecked});
  return f;
}

Fixture bipartite_claw() {
  Fixture f;
  f.name = "bipartite_claw";
  f.description = "K_{1,3} with every edge subdivided";
  f.graph = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
  f.facts = {{"pthin", "2", kChecked}, {"avoids_P34", "false", kChecked}};
  return f;
}

Fixture octahedron() {
  Fixture f;
  f.name = "octahedron";
  f.description = "complement of three disjoint edges";
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) g.add_edge(u, v);
  f.graph = g;
  f.facts = {{"thin", "3", kChecked}};
  return f;
}

std::vector<std::string> fixture_names() {
  return {"fig1a",  "fig1b",           "g72",           "grid:R",     "b0vpg_grid:R", "complete_bipartite:A,B",
          "wheel4", "subdivided_k5",   "cycle:N",       "bipartite_claw", "octahedron"};
}

Fixture make_fixture(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string base = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("fixture '" + spec + "': bad parameter '" + tok + "'");
      }
    }
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw InputError("fixture '" + base + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (base == "fig1a") return want(0), fig1a();
  if (base == "fig1b") return want(0), fig1b();
  if (base == "g72") return want(0), g72();
  if (base == "grid") return want(1), grid(args[0]);
  if (base == "b0vpg_grid") return want(1), b0vpg_grid(args[0]);
  if (base == "complete_bipartite") return want(2), complete_bipartite(args[0], args[1]);
  if (base == "wheel4") return want(0), wheel4();
  if (base == "subdivided_k5") return want(0), subdivided_k5();
  if (base == "cycle") return want(1), cycle(args[0]);
  if (base == "bipartite_claw") return want(0), bipartite_claw();
  if (base == "octahedron") return want(0), octahedron();
  throw InputError("unknown fixture '" + base + "'");
}

}  // namespace thinness
