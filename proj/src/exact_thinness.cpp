#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_set>

#include "thinness/ordering.hpp"

namespace thinness {

namespace {

using Clock = std::chrono::steady_clock;

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : k) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Decides whether g has a k-class representation of the requested kind by
// building the order left to right. Per class only the last vertex matters:
// A = N(last) among unplaced vertices (forward rule), and for the strong mode
// D = placed vertices before last that are not adjacent to last (reverse rule).
struct PrefixSearch {
  const Graph& g;
  ThinnessKind kind;
  int k = 0;
  int n = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> nb;

  struct Slot {
    std::uint64_t a = 0, d = 0;
  };
  std::vector<Slot> slots;
  std::vector<int> seq, cls;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> failed;

  std::uint64_t nodes = 0;
  std::uint64_t node_limit = 0;
  Clock::time_point deadline;
  bool timed = false;
  bool aborted = false;

  PrefixSearch(const Graph& graph, ThinnessKind kd) : g(graph), kind(kd), n(graph.n()) {
    full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    nb.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nb[static_cast<std::size_t>(v)] = g.mask(v);
  }

  std::vector<std::uint64_t> key(std::uint64_t placed) const {
    std::vector<std::uint64_t> kk;
    kk.reserve(1 + 2 * slots.size());
    kk.push_back(placed);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> s;
    for (const auto& sl : slots)
      if (sl.a || sl.d) s.emplace_back(sl.a, sl.d);
    std::sort(s.begin(), s.end());
    for (auto [a, d] : s) {
      kk.push_back(a);
      kk.push_back(d);
    }
    return kk;
  }

  bool out_of_budget() {
    ++nodes;
    if (nodes > node_limit) return true;
    if (timed && (nodes & 1023U) == 0 && Clock::now() > deadline) return true;
    return false;
  }

  bool dfs(std::uint64_t placed) {
    if (placed == full) return true;
    if (aborted || out_of_budget()) {
      aborted = true;
      return false;
    }
    auto kk = key(placed);
    if (failed.count(kk)) return false;
    const std::uint64_t unplaced = full & ~placed;
    for (std::uint64_t rest = unplaced; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      const std::uint64_t bx = std::uint64_t{1} << x;
      const std::uint64_t nx = nb[static_cast<std::size_t>(x)];
      const std::uint64_t after = unplaced & ~bx;
      std::uint64_t reach = 0;  // vertices that can still matter for the reverse rule
      if (kind.proper)
        for (std::uint64_t r = after; r; r &= r - 1) reach |= nb[static_cast<std::size_t>(std::countr_zero(r))];
      bool tried_free = false;
      for (int c = 0; c < k; ++c) {
        const Slot cur = slots[static_cast<std::size_t>(c)];
        const bool free_slot = cur.a == 0 && cur.d == 0;
        if (free_slot) {
          if (tried_free) continue;
          tried_free = true;
        } else {
          bool dup = false;
          for (int c2 = 0; c2 < c && !dup; ++c2)
            dup = slots[static_cast<std::size_t>(c2)].a == cur.a && slots[static_cast<std::size_t>(c2)].d == cur.d;
          if (dup) continue;
        }
        if (cur.a & ~bx & ~nx) continue;
        if (kind.independent && (cur.a & bx)) continue;
        if (kind.proper && (nx & cur.d)) continue;
        std::vector<Slot> saved = slots;
        for (auto& sl : slots) {
          sl.a &= after;
          sl.d &= reach;
        }
        slots[static_cast<std::size_t>(c)].a = nx & after;
        slots[static_cast<std::size_t>(c)].d = kind.proper ? (placed & ~nx & reach) : 0;
        seq.push_back(x);
        cls.push_back(c);
        bool ok = dfs(placed | bx);
        if (ok) return true;
        seq.pop_back();
        cls.pop_back();
        slots = std::move(saved);
        if (aborted) return false;
      }
    }
    failed.insert(std::move(kk));
    return false;
  }

  bool run(int classes) {
    k = classes;
    slots.assign(static_cast<std::size_t>(k), Slot{});
    seq.clear();
    cls.clear();
    failed.clear();
    return dfs(0);
  }
};

Representation greedy_certificate(const Graph& g, ThinnessKind kind) {
  Representation rep;
  rep.order = VertexOrder::identity(g.n());
  Graph h = conflict_graph(g, rep.order, kind.mode());
  if (kind.independent)
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
  std::vector<int> col(static_cast<std::size_t>(g.n()), -1);
  for (int v = 0; v < g.n(); ++v) {
    std::vector<char> used(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int u : h.neighbors(v))
      if (col[static_cast<std::size_t>(u)] >= 0) used[static_cast<std::size_t>(col[static_cast<std::size_t>(u)])] = 1;
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    col[static_cast<std::size_t>(v)] = c;
  }
  rep.partition = compact_partition(col);
  return rep;
}

}  // namespace

ThinnessResult exact_thinness(const Graph& g, ThinnessKind kind, const Budget& budget) {
  if (g.n() > 64) throw InputError("exact thinness search supports at most 64 vertices");
  const auto start = Clock::now();
  ThinnessResult res;
  if (g.n() == 0) {
    res.exact = true;
    return res;
  }
  PrefixSearch search(g, kind);
  search.node_limit = budget.nodes;
  if (budget.seconds < 1e15) {
    search.timed = true;
    search.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.seconds));
  }
  for (int k = 1; k <= g.n(); ++k) {
    bool ok = search.run(k);
    if (ok) {
      res.exact = true;
      res.value = k;
      res.lower_bound = k;
      res.certificate.order.seq = search.seq;
      res.certificate.partition = compact_partition([&] {
        std::vector<int> col(static_cast<std::size_t>(g.n()));
        for (std::size_t i = 0; i < search.seq.size(); ++i)
          col[static_cast<std::size_t>(search.seq[i])] = search.cls[i];
        return col;
      }());
      break;
    }
    if (search.aborted) {
      res.exact = false;
      res.lower_bound = k;
      res.certificate = greedy_certificate(g, kind);
      res.value = res.certificate.partition.k;
      break;
    }
  }
  res.nodes = search.nodes;
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

}  // namespace thinness
