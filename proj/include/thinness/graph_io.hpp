#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "thinness/graph.hpp"

namespace thinness {

// Text format: first line "n m", then m lines "u v" (0-based); '#' starts a comment line.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

// {"n": int, "edges": [[u,v],...], "names": [...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Detects JSON by a leading '{'.
Graph parse_graph(const std::string& text);
std::string read_file(const std::string& path);
Graph read_graph_file(const std::string& path);

}  // namespace thinness
