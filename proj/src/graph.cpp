#include "thinness/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <queue>

namespace thinness {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw InputError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex index out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t x = r[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

int Graph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (int v = 0; v < n_; ++v) s += static_cast<std::size_t>(degree(v));
  return s / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != n_)
    throw InputError("name table size does not match vertex count");
  names_ = std::move(names);
}

std::string Graph::name(int v) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

int Graph::find_name(const std::string& s) const {
  for (int v = 0; v < static_cast<int>(names_.size()); ++v)
    if (names_[static_cast<std::size_t>(v)] == s) return v;
  return -1;
}

bool Graph::same_edges(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

std::vector<int> VertexOrder::positions() const {
  std::vector<int> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) pos[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
  return pos;
}

VertexOrder VertexOrder::identity(int n) {
  VertexOrder o;
  o.seq.resize(static_cast<std::size_t>(n));
  std::iota(o.seq.begin(), o.seq.end(), 0);
  return o;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < class_of.size(); ++v)
    out[static_cast<std::size_t>(class_of[v])].push_back(static_cast<int>(v));
  return out;
}

Partition Partition::single(int n) {
  Partition p;
  p.class_of.assign(static_cast<std::size_t>(n), 0);
  p.k = n > 0 ? 1 : 0;
  return p;
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("arc endpoint out of range");
  if (u == v) throw InputError("self-arc");
  auto& s = succ_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

bool Digraph::has_arc(int u, int v) const {
  const auto& s = succ_[static_cast<std::size_t>(u)];
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : succ_[static_cast<std::size_t>(u)]) out.emplace_back(u, v);
  return out;
}

std::size_t Digraph::arc_count() const {
  std::size_t s = 0;
  for (const auto& v : succ_) s += v.size();
  return s;
}

void validate_order(const VertexOrder& order, int n) {
  if (static_cast<int>(order.seq.size()) != n) throw InputError("order length does not match vertex count");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order.seq) {
    if (v < 0 || v >= n) throw InputError("order entry out of range");
    if (seen[static_cast<std::size_t>(v)]) throw InputError("order repeats a vertex");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

void validate_partition(const Partition& p, int n) {
  if (static_cast<int>(p.class_of.size()) != n) throw InputError("partition size does not match vertex count");
  std::vector<char> used(static_cast<std::size_t>(std::max(p.k, 0)), 0);
  for (int c : p.class_of) {
    if (c < 0 || c >= p.k) throw InputError("class index out of range");
    used[static_cast<std::size_t>(c)] = 1;
  }
  for (char u : used)
    if (!u) throw InputError("partition has an empty class");
}

void validate_representation(const Representation& rep, int n) {
  validate_order(rep.order, n);
  validate_partition(rep.partition, n);
}

Partition compact_partition(const std::vector<int>& class_of) {
  Partition p;
  std::vector<int> remap;
  p.class_of.resize(class_of.size());
  for (std::size_t v = 0; v < class_of.size(); ++v) {
    int c = class_of[v];
    if (c >= static_cast<int>(remap.size())) remap.resize(static_cast<std::size_t>(c) + 1, -1);
    if (remap[static_cast<std::size_t>(c)] < 0) remap[static_cast<std::size_t>(c)] = p.k++;
    p.class_of[v] = remap[static_cast<std::size_t>(c)];
  }
  return p;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.n()) throw InputError("subset vertex out of range");
    if (seen[static_cast<std::size_t>(v)]) throw InputError("subset repeats a vertex");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const int m = static_cast<int>(vertices.size());
  Graph h(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) h.add_edge(i, j);
  if (!g.names().empty()) {
    std::vector<std::string> names;
    for (int v : vertices) names.push_back(g.name(v));
    h.set_names(std::move(names));
  }
  return h;
}

Graph bipartite_half(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  for (int v : a) {
    if (v < 0 || v >= g.n()) throw InputError("vertex out of range");
    side[static_cast<std::size_t>(v)] = 0;
  }
  for (int v : b) {
    if (v < 0 || v >= g.n()) throw InputError("vertex out of range");
    if (side[static_cast<std::size_t>(v)] == 0) throw InputError("bipartite_half: sets overlap");
    side[static_cast<std::size_t>(v)] = 1;
  }
  Graph h(g.n());
  for (int u : a)
    for (int v : b)
      if (g.adjacent(u, v)) h.add_edge(u, v);
  if (!g.names().empty()) h.set_names(g.names());
  return h;
}

namespace {

std::vector<int> shortest_cycle_through(const Digraph& d, int s, const std::vector<char>& alive) {
  std::vector<int> parent(static_cast<std::size_t>(d.n()), -1);
  std::vector<char> seen(static_cast<std::size_t>(d.n()), 0);
  std::deque<int> q{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : d.successors(u)) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (v == s) {
        std::vector<int> path{u};
        while (path.back() != s) path.push_back(parent[static_cast<std::size_t>(path.back())]);
        std::reverse(path.begin(), path.end());
        path.push_back(s);
        return path;
      }
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        parent[static_cast<std::size_t>(v)] = u;
        q.push_back(v);
      }
    }
  }
  return {};
}

}  // namespace

TopoResult topological_sort(const Digraph& d) {
  const int n = d.n();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v : d.successors(u)) ++indeg[static_cast<std::size_t>(v)];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  TopoResult res;
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    res.order.seq.push_back(u);
    for (int v : d.successors(u))
      if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  if (static_cast<int>(res.order.seq.size()) == n) {
    res.acyclic = true;
    return res;
  }
  // Every leftover vertex has a predecessor among the leftovers, so a cycle exists there.
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (int v : res.order.seq) alive[static_cast<std::size_t>(v)] = 0;
  res.order.seq.clear();
  for (int s = 0; s < n; ++s) {
    if (!alive[static_cast<std::size_t>(s)]) continue;
    auto c = shortest_cycle_through(d, s, alive);
    if (!c.empty() && (res.cycle.empty() || c.size() < res.cycle.size())) res.cycle = std::move(c);
  }
  return res;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int v : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          stack.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          return {};
        }
      }
    }
  }
  return color;
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 8) throw InputError("graph enumeration supports 0 <= n <= 8");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (std::uint64_t m = 0; m < total; ++m) {
    std::fill(adj.begin(), adj.end(), 0U);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) {
        adj[static_cast<std::size_t>(slots[i].first)] |= 1U << slots[i].second;
        adj[static_cast<std::size_t>(slots[i].second)] |= 1U << slots[i].first;
      }
    if (connected_only && n > 1) {
      std::uint32_t reach = 1, frontier = 1;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~reach;
        reach |= next;
      }
      if (reach != (1U << n) - 1U) continue;
    }
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    fn(g);
  }
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n > 7) throw InputError("enumerate_connected_graphs materialises at most n = 7; use for_each_graph");
  std::vector<Graph> out;
  for_each_graph(n, true, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

VertexOrder random_order(int n, std::mt19937_64& rng) {
  VertexOrder o = VertexOrder::identity(n);
  std::shuffle(o.seq.begin(), o.seq.end(), rng);
  return o;
}

}  // namespace thinness
