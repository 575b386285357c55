#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "thinness/fixtures.hpp"
#include "thinness/graph_io.hpp"

namespace thinness::cli {

enum Exit { kOk = 0, kInput = 1, kBudget = 2, kInvalid = 3, kMismatch = 4 };

// Failure that maps to a specific exit code.
struct ExitError : std::runtime_error {
  ExitError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
  int code;
};

// Collects one command's result as JSON and as key=value text lines.
class Report {
 public:
  explicit Report(bool json) : json_(json) {}

  void put(const std::string& key, const nlohmann::json& value, const std::string& text) {
    data_[key] = value;
    lines_.push_back(key + "=" + text);
  }
  void put(const std::string& key, const nlohmann::json& value) {
    put(key, value, value.is_string() ? value.get<std::string>() : value.dump());
  }
  void flag(const std::string& key, bool value) { put(key, nlohmann::json(value), value ? "true" : "false"); }
  void line(const std::string& s) { lines_.push_back(s); }
  nlohmann::json& data() { return data_; }

  void emit(std::ostream& out) const {
    if (json_) {
      out << data_.dump(2) << '\n';
    } else {
      for (const auto& l : lines_) out << l << '\n';
    }
  }

 private:
  bool json_;
  nlohmann::json data_ = nlohmann::json::object();
  std::vector<std::string> lines_;
};

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("expected a comma separated integer list, got '" + s + "'");
    }
  }
  return out;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline nlohmann::json read_json_file(const std::string& path) {
  const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Graph from a file ("-" is stdin) or a named fixture.
struct GraphSource {
  std::string path;
  std::string fixture;

  bool given() const { return !path.empty() || !fixture.empty(); }

  std::pair<Graph, std::optional<Fixture>> load() const {
    if (!path.empty() && !fixture.empty()) throw InputError("give either a graph file or --fixture, not both");
    if (!fixture.empty()) {
      Fixture f = make_fixture(fixture);
      Graph g = f.graph;
      return {std::move(g), std::move(f)};
    }
    if (path.empty()) throw InputError("no graph given (file argument or --fixture)");
    if (path == "-") return {parse_graph(std::string(std::istreambuf_iterator<char>(std::cin), {})), std::nullopt};
    return {read_graph_file(path), std::nullopt};
  }
};

}  // namespace thinness::cli
