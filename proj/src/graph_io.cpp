#include "thinness/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace thinness {

Graph read_graph_text(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      auto p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) throw InputError("graph text: missing header line");
  std::istringstream hs(header);
  long long n = -1, m = -1;
  if (!(hs >> n >> m) || n < 0 || m < 0) throw InputError("graph text: header must be 'n m'");
  if (n > 100000) throw InputError("graph text: vertex count too large");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    std::string l;
    if (!next_line(l)) throw InputError("graph text: expected " + std::to_string(m) + " edge lines");
    std::istringstream es(l);
    long long u = -1, v = -1;
    if (!(es >> u >> v)) throw InputError("graph text: bad edge line '" + l + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("graph text: edge endpoint out of range");
    if (u == v) throw InputError("graph text: self-loop");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

void write_graph_text(std::ostream& out, const Graph& g) {
  auto es = g.edges();
  out << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InputError("graph json: missing integer field 'n'");
  long long n = j["n"].get<long long>();
  if (n < 0 || n > 100000) throw InputError("graph json: bad vertex count");
  Graph g(static_cast<int>(n));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("graph json: 'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("graph json: each edge must be [u, v]");
      long long u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("graph json: edge endpoint out of range");
      if (u == v) throw InputError("graph json: self-loop");
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (j.contains("names")) {
    if (!j["names"].is_array()) throw InputError("graph json: 'names' must be an array");
    std::vector<std::string> names;
    for (const auto& s : j["names"]) {
      if (!s.is_string()) throw InputError("graph json: names must be strings");
      names.push_back(s.get<std::string>());
    }
    g.set_names(std::move(names));
  }
  return g;
}

Graph parse_graph(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("graph json: ") + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in(text);
  return read_graph_text(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

}  // namespace thinness
