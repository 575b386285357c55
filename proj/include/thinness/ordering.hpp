#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "json.hpp"
#include "thinness/graph.hpp"

namespace thinness {

enum class ConsistencyMode { consistent, strong };

std::string to_string(ConsistencyMode m);
ConsistencyMode parse_mode(const std::string& s);

struct ThinnessKind {
  bool proper = false;
  bool independent = false;

  static ThinnessKind thin() { return {false, false}; }
  static ThinnessKind pthin() { return {true, false}; }
  static ThinnessKind indthin() { return {false, true}; }
  static ThinnessKind indpthin() { return {true, true}; }
  static ThinnessKind parse(const std::string& s);

  ConsistencyMode mode() const { return proper ? ConsistencyMode::strong : ConsistencyMode::consistent; }
  std::string name() const;
  bool operator==(const ThinnessKind&) const = default;
};

// A violated triple, listed in increasing order. In the forward case (r,s,t)
// has r,s in one class with t~r and t!~s; in the reverse case s,t share a class
// with r~t and r!~s.
struct Violation {
  std::array<int, 3> triple{};
  bool reverse = false;
};

struct ConsistencyReport {
  bool ok = true;
  std::optional<Violation> witness;
};

ConsistencyReport is_consistent(const Graph& g, const Representation& rep, ConsistencyMode mode);

// G_< (consistent) or its strong counterpart; vertex labels are those of g.
Graph conflict_graph(const Graph& g, const VertexOrder& order, ConsistencyMode mode);

// Exact colouring helpers on arbitrary graphs.
int clique_number(const Graph& h);
// Minimum colouring, vertices coloured in the given sequence, lowest colour first.
std::vector<int> min_coloring(const Graph& h, const std::vector<int>& sequence);

Partition min_classes_for_order(const Graph& g, const VertexOrder& order, ConsistencyMode mode, bool independent);

struct Budget {
  double seconds = std::numeric_limits<double>::infinity();
  std::uint64_t nodes = std::numeric_limits<std::uint64_t>::max();
};

struct ThinnessResult {
  bool exact = false;          // false when the budget ran out
  int value = 0;               // exact value, or best known upper bound
  int lower_bound = 0;
  Representation certificate;  // witnesses value
  std::uint64_t nodes = 0;
  double seconds = 0;
};

// Minimum k such that g has a k-class representation of the given kind. n <= 64.
ThinnessResult exact_thinness(const Graph& g, ThinnessKind kind, const Budget& budget = {});

struct CertificateCheck {
  bool ok = true;
  std::string reason;
  std::optional<Violation> witness;
};

CertificateCheck check_certificate(const Graph& g, const Representation& rep, ThinnessKind kind);
bool verify_certificate(const Graph& g, const Representation& rep, ThinnessKind kind);

// Random graph together with a k-class representation consistent with it. Each vertex
// picks, per class, a random suffix of the earlier class members as its earlier neighbours.
// With independent set, classes carry no edges. Every class is nonempty when n >= k.
struct RandomInstance {
  Graph graph;
  Representation rep;
};
RandomInstance random_consistent_instance(int n, int k, bool independent, std::mt19937_64& rng);

// {"order": [...], "classes": [...], "kind": "...", "k": int}
nlohmann::json certificate_to_json(const Representation& rep, ThinnessKind kind);
Representation certificate_from_json(const nlohmann::json& j, ThinnessKind* kind_out = nullptr);

}  // namespace thinness
