#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thinness {

// Thrown for malformed input or violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Simple undirected graph on dense vertices 0..n-1, stored as bitset rows.
// Rows use one 64-bit word when n <= 64 and several words otherwise.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int words() const { return words_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  // Single-word adjacency mask; requires n <= 64.
  std::uint64_t mask(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name(int v) const;
  int find_name(const std::string& s) const;

  // Structural equality; names are ignored.
  bool same_edges(const Graph& other) const;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> names_;
};

struct VertexOrder {
  std::vector<int> seq;  // seq[i] is the i-th smallest vertex
  std::vector<int> positions() const;
  static VertexOrder identity(int n);
};

struct Partition {
  std::vector<int> class_of;
  int k = 0;
  std::vector<std::vector<int>> classes() const;
  static Partition single(int n);
};

struct Representation {
  VertexOrder order;
  Partition partition;
};

// Digraph without self-arcs; successor lists are kept sorted and unique.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), succ_(static_cast<std::size_t>(n)) {}
  int n() const { return n_; }
  void add_arc(int u, int v);
  bool has_arc(int u, int v) const;
  const std::vector<int>& successors(int v) const { return succ_[static_cast<std::size_t>(v)]; }
  std::vector<Edge> arcs() const;
  std::size_t arc_count() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> succ_;
};

struct TopoResult {
  bool acyclic = false;
  VertexOrder order;       // valid when acyclic
  std::vector<int> cycle;  // closed walk v0,...,vk,v0 when cyclic
};

void validate_order(const VertexOrder& order, int n);
void validate_partition(const Partition& p, int n);
void validate_representation(const Representation& rep, int n);
// Relabels classes to 0..k-1 by first appearance along the vertex index.
Partition compact_partition(const std::vector<int>& class_of);

Graph induced_subgraph(const Graph& g, const VertexSet& vertices);
Graph bipartite_half(const Graph& g, const VertexSet& a, const VertexSet& b);
TopoResult topological_sort(const Digraph& d);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
// Two-colouring (0/1 per vertex) or empty when g is not bipartite.
std::vector<int> bipartition(const Graph& g);
Graph complement(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Labeled enumeration by edge mask; n <= 8.
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_connected_graphs(int n);

Graph random_graph(int n, double p, std::mt19937_64& rng);
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);
VertexOrder random_order(int n, std::mt19937_64& rng);

}  // namespace thinness
