#include "thinness/bounds.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <queue>
#include <unordered_set>

#include "thinness/kernels.hpp"

namespace thinness {

namespace {

std::vector<std::uint32_t> masks32(const Graph& g) {
  std::vector<std::uint32_t> m(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) m[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.mask(v));
  return m;
}

class BandwidthSearch {
 public:
  BandwidthSearch(const Graph& g, int b) : n_(g.n()), b_(b), nbr_(masks32(g)), seq_(static_cast<std::size_t>(n_)) {}

  bool run() { return rec(0, 0); }
  const std::vector<int>& seq() const { return seq_; }

 private:
  bool rec(int p, std::uint32_t placed) {
    if (p == n_) return true;
    const int lo = std::max(0, p - b_);
    if (lo > 0 && (nbr_[static_cast<std::size_t>(seq_[static_cast<std::size_t>(lo - 1)])] & ~placed)) return false;
    std::uint32_t window = 0;
    std::uint64_t key = placed;
    for (int q = lo; q < p; ++q) {
      const int u = seq_[static_cast<std::size_t>(q)];
      window |= std::uint32_t{1} << u;
      key = (key << 4) | static_cast<std::uint64_t>(u);
      const int open = std::popcount(nbr_[static_cast<std::size_t>(u)] & ~placed);
      if (open > q + b_ - p + 1) return false;
    }
    if (failed_.count(key)) return false;
    for (int x = 0; x < n_; ++x) {
      const std::uint32_t bit = std::uint32_t{1} << x;
      if ((placed & bit) || (nbr_[static_cast<std::size_t>(x)] & placed & ~window)) continue;
      seq_[static_cast<std::size_t>(p)] = x;
      if (rec(p + 1, placed | bit)) return true;
    }
    failed_.insert(key);
    return false;
  }

  int n_, b_;
  std::vector<std::uint32_t> nbr_;
  std::vector<int> seq_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

int PathDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

std::pair<std::vector<int>, std::vector<int>> bag_spans(const PathDecomposition& pd, int n) {
  std::vector<int> s(static_cast<std::size_t>(n), -1), e(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
    for (int v : pd.bags[static_cast<std::size_t>(i)]) {
      if (v < 0 || v >= n) throw InputError("decomposition: vertex out of range");
      if (s[static_cast<std::size_t>(v)] < 0) s[static_cast<std::size_t>(v)] = i;
      e[static_cast<std::size_t>(v)] = i;
    }
  return {s, e};
}

DecompositionCheck check_decomposition(const Graph& g, const PathDecomposition& pd) {
  const int n = g.n();
  DecompositionCheck out;
  auto fail = [&](const std::string& why) {
    out.ok = out.proper = false;
    out.reason = why;
    return out;
  };
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const auto& bag : pd.bags) {
    std::vector<int> sorted = bag;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail("a bag repeats a vertex");
    for (int v : bag) {
      if (v < 0 || v >= n) return fail("bag vertex out of range");
      ++count[static_cast<std::size_t>(v)];
    }
  }
  auto [s, e] = bag_spans(pd, n);
  for (int v = 0; v < n; ++v) {
    if (s[static_cast<std::size_t>(v)] < 0) return fail("vertex " + std::to_string(v) + " is in no bag");
    if (count[static_cast<std::size_t>(v)] != e[static_cast<std::size_t>(v)] - s[static_cast<std::size_t>(v)] + 1)
      return fail("bags of vertex " + std::to_string(v) + " are not consecutive");
  }
  for (const auto& [u, v] : g.edges()) {
    if (std::max(s[static_cast<std::size_t>(u)], s[static_cast<std::size_t>(v)]) >
        std::min(e[static_cast<std::size_t>(u)], e[static_cast<std::size_t>(v)]))
      return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  for (int u = 0; u < n && out.proper; ++u)
    for (int v = 0; v < n; ++v) {
      const auto su = s[static_cast<std::size_t>(u)], eu = e[static_cast<std::size_t>(u)];
      const auto sv = s[static_cast<std::size_t>(v)], ev = e[static_cast<std::size_t>(v)];
      if (u != v && sv <= su && eu <= ev && (sv < su || eu < ev)) {
        out.proper = false;
        out.reason = "span of " + std::to_string(u) + " lies strictly inside the span of " + std::to_string(v);
        break;
      }
    }
  return out;
}

void validate_labeling(const Labeling& f, int n) {
  if (static_cast<int>(f.f.size()) != n) throw InputError("labeling size does not match vertex count");
  std::vector<int> sorted = f.f;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("labeling is not injective");
}

int labeling_bandwidth(const Graph& g, const Labeling& f) {
  validate_labeling(f, g.n());
  int b = 0;
  for (const auto& [u, v] : g.edges())
    b = std::max(b, std::abs(f.f[static_cast<std::size_t>(u)] - f.f[static_cast<std::size_t>(v)]));
  return b;
}

BandwidthResult bandwidth(const Graph& g) {
  const int n = g.n();
  if (n > 12) throw InputError("bandwidth: exact search is limited to 12 vertices");
  BandwidthResult res;
  if (n == 0) return res;
  const int lb = g.edge_count() ? std::max(1, (g.max_degree() + 1) / 2) : 0;
  for (int b = lb; b < n; ++b) {
    BandwidthSearch s(g, b);
    if (s.run()) {
      res.value = b;
      res.labeling.f.assign(static_cast<std::size_t>(n), 0);
      for (int p = 0; p < n; ++p) res.labeling.f[static_cast<std::size_t>(s.seq()[static_cast<std::size_t>(p)])] = p;
      return res;
    }
  }
  throw std::logic_error("bandwidth search failed at b = n-1");
}

PathwidthResult pathwidth(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw InputError("pathwidth: exact DP is limited to 16 vertices");
  PathwidthResult res;
  if (n == 0) {
    res.value = -1;
    return res;
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> nbr = masks32(g);
  std::vector<std::uint8_t> open(std::size_t{1} << n);
  kernels::boundary_table(nbr.data(), n, open.data());
  // boundary of a prefix S: vertices of S with a neighbour outside, i.e. open[V \ S]
  auto bd = [&](std::uint32_t s) { return static_cast<int>(open[full & ~s]); };
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0xff);
  std::vector<std::int8_t> last(std::size_t{1} << n, -1);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prev = s & ~(std::uint32_t{1} << v);
      const int cost = std::max<int>(best[prev], bd(prev));
      if (cost < best[s]) {
        best[s] = static_cast<std::uint8_t>(cost);
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<int> order;
  for (std::uint32_t s = full; s; s &= ~(std::uint32_t{1} << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  std::uint32_t prefix = 0;
  for (int v : order) {
    std::vector<int> bag;
    for (int u = 0; u < n; ++u)
      if (((prefix >> u) & 1U) && (nbr[static_cast<std::size_t>(u)] & ~prefix)) bag.push_back(u);
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    res.decomposition.bags.push_back(std::move(bag));
    prefix |= std::uint32_t{1} << v;
  }
  res.value = best[full];
  return res;
}

PathDecomposition proper_decomposition_from_labeling(const Graph& g, const Labeling& f) {
  const int n = g.n();
  validate_labeling(f, n);
  std::vector<int> by_label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_label[static_cast<std::size_t>(v)] = v;
  std::sort(by_label.begin(), by_label.end(),
            [&](int a, int b) { return f.f[static_cast<std::size_t>(a)] < f.f[static_cast<std::size_t>(b)]; });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(by_label[static_cast<std::size_t>(r)])] = r;
  int b = 0;
  for (const auto& [u, v] : g.edges())
    b = std::max(b, std::abs(rank[static_cast<std::size_t>(u)] - rank[static_cast<std::size_t>(v)]));
  PathDecomposition pd;
  for (int i = -b; i <= n - 1; ++i) {
    std::vector<int> bag;
    for (int r = std::max(i, 0); r <= std::min(i + b, n - 1); ++r) bag.push_back(by_label[static_cast<std::size_t>(r)]);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

Representation partition_from_decomposition(const Graph& g, const PathDecomposition& pd) {
  const int n = g.n();
  DecompositionCheck chk = check_decomposition(g, pd);
  if (!chk.ok) throw InputError("invalid path decomposition: " + chk.reason);
  auto [s, e] = bag_spans(pd, n);
  Representation rep;
  rep.order = VertexOrder::identity(n);
  std::sort(rep.order.seq.begin(), rep.order.seq.end(), [&](int a, int b) {
    const auto ka = std::make_tuple(s[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(a)], a);
    const auto kb = std::make_tuple(s[static_cast<std::size_t>(b)], e[static_cast<std::size_t>(b)], b);
    return ka < kb;
  });
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int k = 0;
  for (int v : rep.order.seq) {
    const auto& bag = pd.bags[static_cast<std::size_t>(s[static_cast<std::size_t>(v)])];
    std::vector<char> taken(bag.size() + 1, 0);
    for (int u : bag)
      if (u != v && cls[static_cast<std::size_t>(u)] >= 0 && cls[static_cast<std::size_t>(u)] < static_cast<int>(taken.size()))
        taken[static_cast<std::size_t>(cls[static_cast<std::size_t>(u)])] = 1;
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    cls[static_cast<std::size_t>(v)] = c;
    k = std::max(k, c + 1);
  }
  rep.partition.class_of = cls;
  rep.partition.k = k;
  return rep;
}

int iso_peak(const Graph& g) {
  const int n = g.n();
  if (n > 20) throw InputError("iso_peak: subset scan is limited to 20 vertices");
  if (n == 0) return 0;
  std::vector<std::uint32_t> nbr = masks32(g);
  std::vector<std::uint8_t> open(std::size_t{1} << n);
  kernels::boundary_table(nbr.data(), n, open.data());
  std::vector<int> low(static_cast<std::size_t>(n + 1), INT_MAX);
  for (std::uint32_t y = 0; y < (std::uint32_t{1} << n); ++y) {
    int& slot = low[static_cast<std::size_t>(std::popcount(y))];
    slot = std::min(slot, static_cast<int>(open[y]));
  }
  return *std::max_element(low.begin(), low.end());
}

int diameter(const Graph& g) {
  const int n = g.n();
  if (!is_connected(g)) throw InputError("diameter: graph is not connected");
  int best = 0;
  for (int src = 0; src < n; ++src) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      best = std::max(best, dist[static_cast<std::size_t>(v)]);
      for (int u : g.neighbors(v))
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          q.push(u);
        }
    }
  }
  return best;
}

nlohmann::json decomposition_to_json(const PathDecomposition& pd) { return {{"bags", pd.bags}}; }

PathDecomposition decomposition_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("bags")) throw InputError("decomposition json: needs 'bags'");
  try {
    return PathDecomposition{j["bags"].get<std::vector<std::vector<int>>>()};
  } catch (const nlohmann::json::exception&) {
    throw InputError("decomposition json: 'bags' must be an array of integer arrays");
  }
}

nlohmann::json labeling_to_json(const Labeling& f) { return {{"f", f.f}}; }

Labeling labeling_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("f")) throw InputError("labeling json: needs 'f'");
  try {
    return Labeling{j["f"].get<std::vector<int>>()};
  } catch (const nlohmann::json::exception&) {
    throw InputError("labeling json: 'f' must be an integer array");
  }
}

}  // namespace thinness
