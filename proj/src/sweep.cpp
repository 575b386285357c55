#include "thinness/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "thinness/boxmodel.hpp"
#include "thinness/bounds.hpp"
#include "thinness/ceo.hpp"
#include "thinness/graph_io.hpp"
#include "thinness/patterns.hpp"
#include "thinness/vpg.hpp"

namespace thinness {

namespace {

constexpr std::size_t kMaxMismatchLines = 20;

class Sweep {
 public:
  Sweep(std::string name, const SweepOptions& opt) : opt_(opt) { report_.theorem = std::move(name); }

  // Runs one case; check returns an empty string on success or a description of the mismatch.
  void record(int n, const std::function<std::string()>& check) {
    SweepRow& row = rows_[n];
    row.n = n;
    ++row.checked;
    std::string why;
    try {
      why = check();
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    if (!why.empty()) {
      ++row.failed;
      if (report_.mismatches.size() < kMaxMismatchLines) report_.mismatches.push_back(why);
    }
  }

  int exact(const Graph& g, ThinnessKind kind) {
    ThinnessResult r = exact_thinness(g, kind, opt_.budget);
    if (!r.exact) throw std::runtime_error(kind.name() + " solver ran out of budget");
    return r.value;
  }

  bool member(const Graph& g, const PatternFamily& f) {
    MembershipResult r = ord_membership(g, f, opt_.budget);
    if (r.status == MembershipResult::Status::budget_exceeded)
      throw std::runtime_error("pattern search for " + f.name + " ran out of budget");
    return r.status == MembershipResult::Status::member;
  }

  SweepReport finish(double seconds) {
    for (auto& [n, row] : rows_) {
      report_.rows.push_back(row);
      report_.checked += row.checked;
      report_.failed += row.failed;
    }
    report_.seconds = seconds;
    return report_;
  }

  const SweepOptions& opt() const { return opt_; }

 private:
  SweepOptions opt_;
  SweepReport report_;
  std::map<int, SweepRow> rows_;
};

std::string describe(const Graph& g) { return graph_to_json(g).dump(); }

std::string mismatch(const Graph& g, const std::string& what) { return what + " on " + describe(g); }

void each_connected(int max_n, const std::function<void(const Graph&)>& fn) {
  for (int n = 1; n <= max_n; ++n) for_each_graph(n, true, fn);
}

bool interleaving_exists(const Graph& g, const Partition& p, const ClassOrder& co, ConsistencyMode mode) {
  std::vector<std::size_t> next(co.class_orders.size(), 0);
  std::vector<int> seq;
  std::function<bool()> rec = [&]() {
    if (static_cast<int>(seq.size()) == g.n()) {
      Representation rep{VertexOrder{seq}, p};
      return is_consistent(g, rep, mode).ok;
    }
    for (std::size_t c = 0; c < co.class_orders.size(); ++c) {
      if (next[c] == co.class_orders[c].size()) continue;
      seq.push_back(co.class_orders[c][next[c]++]);
      const bool ok = rec();
      --next[c];
      seq.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return rec();
}

void sweep_interval(Sweep& s) {
  const PatternFamily p1 = parse_family("P1"), p12 = parse_family("P12");
  each_connected(s.opt().n, [&](const Graph& g) {
    s.record(g.n(), [&]() -> std::string {
      if (s.member(g, p1) != (s.exact(g, ThinnessKind::thin()) == 1)) return mismatch(g, "Ord(P1) vs thin = 1");
      if (s.member(g, p12) != (s.exact(g, ThinnessKind::pthin()) == 1)) return mismatch(g, "Ord(P1,P2) vs pthin = 1");
      return "";
    });
  });
}

void sweep_forb_pat(Sweep& s) {
  const PatternFamily fam = parse_family("P6789");
  auto check = [&](const Graph& g) {
    s.record(g.n(), [&]() -> std::string {
      const bool in = s.member(g, fam);
      const int t = s.exact(g, ThinnessKind::thin());
      if (in != (t <= 2)) return mismatch(g, "Ord(P6,P7,P8,P9) = " + std::to_string(in) + " but thin = " + std::to_string(t));
      return "";
    });
  };
  each_connected(s.opt().n, check);
  std::mt19937_64 rng(s.opt().seed);
  for (int i = 0; i < s.opt().samples; ++i) {
    const int n = s.opt().n + 1 + static_cast<int>(rng() % 2);
    std::uniform_real_distribution<double> dens(0.2, 0.8);
    check(random_connected_graph(n, dens(rng), rng));
  }
}

void sweep_pthin_bw(Sweep& s) {
  each_connected(s.opt().n, [&](const Graph& g) {
    if (g.edge_count() == 0) return;
    s.record(g.n(), [&]() -> std::string {
      const int p = s.exact(g, ThinnessKind::pthin()), b = bandwidth(g).value;
      if (p > b) return mismatch(g, "pthin " + std::to_string(p) + " > bw " + std::to_string(b));
      return "";
    });
  });
}

void sweep_width_bounds(Sweep& s) {
  each_connected(s.opt().n, [&](const Graph& g) {
    s.record(g.n(), [&]() -> std::string {
      const PathwidthResult pw = pathwidth(g);
      const BandwidthResult bw = bandwidth(g);
      const int it = s.exact(g, ThinnessKind::indthin()), ipt = s.exact(g, ThinnessKind::indpthin());
      if (it > pw.value + 1) return mismatch(g, "indthin > pw + 1");
      if (ipt > bw.value + 1) return mismatch(g, "indpthin > bw + 1");
      Representation a = partition_from_decomposition(g, pw.decomposition);
      if (a.partition.k > pw.value + 1 || !verify_certificate(g, a, ThinnessKind::indthin()))
        return mismatch(g, "pathwidth certificate");
      PathDecomposition pd = proper_decomposition_from_labeling(g, bw.labeling);
      if (!check_decomposition(g, pd).proper || pd.width() != bw.value) return mismatch(g, "proper decomposition");
      Representation b = partition_from_decomposition(g, pd);
      if (b.partition.k > bw.value + 1 || !verify_certificate(g, b, ThinnessKind::indpthin()))
        return mismatch(g, "bandwidth certificate");
      return "";
    });
  });
}

void sweep_diameter(Sweep& s) {
  each_connected(s.opt().n, [&](const Graph& g) {
    s.record(g.n(), [&]() -> std::string {
      if (s.exact(g, ThinnessKind::pthin()) > g.n() - diameter(g)) return mismatch(g, "pthin > n - diam");
      return "";
    });
  });
}

void sweep_peak(Sweep& s) {
  each_connected(s.opt().n, [&](const Graph& g) {
    if (g.edge_count() == 0) return;
    s.record(g.n(), [&]() -> std::string {
      const int t = s.exact(g, ThinnessKind::thin()), bv = iso_peak(g);
      if (t * g.max_degree() < bv) return mismatch(g, "thin * max degree < b_v");
      return "";
    });
  });
}

void sweep_bipartite_classes(Sweep& s, bool proper) {
  const PatternFamily plain = parse_family(proper ? "P34" : "P569");
  const PatternFamily bip = parse_family(proper ? "R12" : "R23");
  const PatternFamily bicol = parse_family(proper ? "Q1234" : "Q12");
  const ThinnessKind kind = proper ? ThinnessKind::indpthin() : ThinnessKind::indthin();
  each_connected(s.opt().n, [&](const Graph& g) {
    if (bipartition(g).empty()) return;
    s.record(g.n(), [&]() -> std::string {
      const bool a = s.member(g, plain), b = s.member(g, bip), c = s.member(g, bicol);
      const bool d = s.exact(g, kind) <= 2;
      if (a != b || b != c || c != d) {
        std::ostringstream o;
        o << plain.name << "=" << a << " " << bip.name << "=" << b << " " << bicol.name << "=" << c << " " << kind.name()
          << "<=2 " << d;
        return mismatch(g, o.str());
      }
      return "";
    });
  });
}

void sweep_perfection(Sweep& s) {
  std::mt19937_64 rng(s.opt().seed);
  for (int n = 1; n <= s.opt().n; ++n)
    for_each_graph(n, false, [&](const Graph& g) {
      s.record(n, [&]() -> std::string {
        std::vector<VertexOrder> orders;
        std::uint64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
        if (fact <= static_cast<std::uint64_t>(s.opt().orders)) {
          VertexOrder o = VertexOrder::identity(n);
          do orders.push_back(o);
          while (std::next_permutation(o.seq.begin(), o.seq.end()));
        } else {
          for (int i = 0; i < s.opt().orders; ++i) orders.push_back(random_order(n, rng));
        }
        for (const VertexOrder& o : orders)
          for (ConsistencyMode mode : {ConsistencyMode::consistent, ConsistencyMode::strong}) {
            Graph h = conflict_graph(g, o, mode);
            std::vector<int> col = min_coloring(h, VertexOrder::identity(n).seq);
            const int chi = col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
            if (chi != clique_number(h)) return mismatch(g, "chi != omega for a conflict graph");
          }
        return "";
      });
    });
}

void sweep_ceo(Sweep& s) {
  std::mt19937_64 rng(s.opt().seed);
  for (int i = 0; i < s.opt().samples; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.opt().n));
    std::uniform_real_distribution<double> dens(0.1, 0.9);
    Graph g = random_graph(n, dens(rng), rng);
    Partition p;
    for (int v = 0; v < n; ++v) p.class_of.push_back(static_cast<int>(rng() % 2));
    p = compact_partition(p.class_of);
    ClassOrder co;
    co.class_orders = p.classes();
    for (auto& c : co.class_orders) std::shuffle(c.begin(), c.end(), rng);
    s.record(n, [&]() -> std::string {
      for (ConsistencyMode mode : {ConsistencyMode::consistent, ConsistencyMode::strong}) {
        CeoResult r = solve_ceo(g, p, co, mode);
        const bool brute = interleaving_exists(g, p, co, mode);
        if ((r.status == CeoResult::Status::feasible) != brute) return mismatch(g, "CEO " + to_string(mode));
        if (r.status == CeoResult::Status::feasible && !is_consistent(g, Representation{r.order, p}, mode).ok)
          return mismatch(g, "CEO order is not consistent");
      }
      return "";
    });
  }
}

void sweep_dpat(Sweep& s) {
  std::mt19937_64 rng(s.opt().seed);
  const PatternFamily f1 = parse_family("R23"), f2 = parse_family("R12,R4,R4'"), f3 = parse_family("R12");
  auto avoids = [](const Graph& h, const SideOrders& so, const PatternFamily& f) {
    for (const Pattern& p : f.patterns)
      if (occurs(h, so, p)) return false;
    return true;
  };
  for (int i = 0; i < s.opt().samples; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, s.opt().n - 1)));
    Partition p;
    for (int v = 0; v < n; ++v) p.class_of.push_back(v < 2 ? v : static_cast<int>(rng() % 2));
    p.k = 2;
    std::uniform_real_distribution<double> dens(0.1, 0.9);
    Graph g = random_graph(n, dens(rng), rng);
    ClassOrder co;
    co.class_orders = p.classes();
    for (auto& c : co.class_orders) std::shuffle(c.begin(), c.end(), rng);
    s.record(n, [&]() -> std::string {
      Graph h(n);
      for (const auto& [u, v] : g.edges())
        if (p.class_of[static_cast<std::size_t>(u)] != p.class_of[static_cast<std::size_t>(v)]) h.add_edge(u, v);
      SideOrders so{co.class_orders[0], co.class_orders[1]};
      const bool d = topological_sort(build_ceo_digraph(g, p, co, ConsistencyMode::consistent)).acyclic;
      const bool dt = topological_sort(build_ceo_digraph(g, p, co, ConsistencyMode::strong)).acyclic;
      if (d != avoids(h, so, f1)) return mismatch(g, "D acyclic vs avoids R2,R3");
      if (dt != avoids(h, so, f2)) return mismatch(g, "strong D acyclic vs avoids R1,R2,R4,R4'");
      bool isolated = false;
      for (int v = 0; v < n; ++v) isolated = isolated || h.degree(v) == 0;
      if (!isolated && dt != avoids(h, so, f3)) return mismatch(g, "strong D acyclic vs avoids R1,R2");
      return "";
    });
  }
}

void sweep_models(Sweep& s) {
  std::mt19937_64 rng(s.opt().seed);
  for (int i = 0; i < s.opt().samples; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, s.opt().n - 1)));
    const bool independent = rng() % 4 == 0;
    RandomInstance inst = random_consistent_instance(n, 2, independent, rng);
    const Graph& g = inst.graph;
    const Representation& rep = inst.rep;
    s.record(n, [&]() -> std::string {
      BoxModel m1 = build_m1(g, rep);
      if (!intersection_graph(m1).same_edges(g)) return mismatch(g, "M1 graph");
      if (check_diagonal(m1).label != DiagonalLabel::two_diagonal) return mismatch(g, "M1 not 2-diagonal");
      if (!check_blocking(m1).ok) return mismatch(g, "M1 not blocking");
      const bool strong = is_consistent(g, rep, ConsistencyMode::strong).ok;
      if (strong && !check_bi_semi_proper(m1).ok) return mismatch(g, "M1 not bi-semi-proper");
      if (!intersection_graph(build_m2(m1)).same_edges(g)) return mismatch(g, "M2 graph");
      if (!verify_certificate(g, recover_representation(m1, ConsistencyMode::consistent), ThinnessKind::thin()))
        return mismatch(g, "recovered representation");
      if (strong && !verify_certificate(g, recover_representation(m1, ConsistencyMode::strong), ThinnessKind::pthin()))
        return mismatch(g, "recovered strong representation");
      GridPathModel m3 = build_m3(g, rep), m4 = build_m4(g, rep);
      for (const GridPathModel* m : {&m3, &m4}) {
        if (!path_intersection_graph(*m).same_edges(g)) return mismatch(g, m == &m3 ? "M3 graph" : "M4 graph");
        for (const GridPath& p : m->paths)
          if (p.bends() > 1) return mismatch(g, "path with more than one bend");
      }
      for (const GridPath& p : m4.paths)
        if (p.bends() != 1 || p.pts[1].first != -p.pts[1].second) return mismatch(g, "M4 corner off y = -x");
      if (!check_blocking_l(m4).ok) return mismatch(g, "M4 not L-blocking");
      if (independent) {
        GridPathModel m0 = build_m3(g, rep, true);
        if (!path_intersection_graph(m0).same_edges(g)) return mismatch(g, "independent M3 graph");
        for (const GridPath& p : m0.paths)
          if (p.bends() != 0) return mismatch(g, "independent M3 path bends");
      }
      return "";
    });
  }
}

void sweep_vpg3(Sweep& s) {
  std::mt19937_64 rng(s.opt().seed);
  for (int i = 0; i < s.opt().samples; ++i) {
    const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, s.opt().n - 2)));
    const bool independent = rng() % 3 == 0;
    RandomInstance inst = random_consistent_instance(n, 3, independent, rng);
    s.record(n, [&]() -> std::string {
      GridPathModel m = build_vpg_3thin(inst.graph, inst.rep, independent);
      if (!path_intersection_graph(m).same_edges(inst.graph)) return mismatch(inst.graph, "3-thin path model graph");
      for (const GridPath& p : m.paths)
        if (p.bends() > (independent ? 1 : 3)) return mismatch(inst.graph, "3-thin path model bends");
      return "";
    });
  }
}

}  // namespace

std::vector<std::string> sweep_theorems() {
  return {"interval", "forb-pat-2-thin", "pthin-le-bw",  "width-bounds",   "diameter", "peak",  "char-ind-2-thin",
          "char-prop-ind-2-thin", "perfection", "ceo", "dpat", "models", "vpg3"};
}

SweepReport run_sweep(const std::string& theorem, const SweepOptions& opt) {
  const bool sampled = theorem == "ceo" || theorem == "dpat" || theorem == "models" || theorem == "vpg3";
  if (opt.n < 1 || opt.n > (sampled ? 12 : 7))
    throw InputError(std::string("sweep: n must be between 1 and ") + (sampled ? "12" : "7") + " for " + theorem);
  if (opt.samples < 0 || opt.orders < 1) throw InputError("sweep: samples must be >= 0 and orders >= 1");
  const auto start = std::chrono::steady_clock::now();
  Sweep s(theorem, opt);
  if (theorem == "interval") sweep_interval(s);
  else if (theorem == "forb-pat-2-thin") sweep_forb_pat(s);
  else if (theorem == "pthin-le-bw") sweep_pthin_bw(s);
  else if (theorem == "width-bounds") sweep_width_bounds(s);
  else if (theorem == "diameter") sweep_diameter(s);
  else if (theorem == "peak") sweep_peak(s);
  else if (theorem == "char-ind-2-thin") sweep_bipartite_classes(s, false);
  else if (theorem == "char-prop-ind-2-thin") sweep_bipartite_classes(s, true);
  else if (theorem == "perfection") sweep_perfection(s);
  else if (theorem == "ceo") sweep_ceo(s);
  else if (theorem == "dpat") sweep_dpat(s);
  else if (theorem == "models") sweep_models(s);
  else if (theorem == "vpg3") sweep_vpg3(s);
  else throw InputError("unknown sweep theorem '" + theorem + "'");
  return s.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

}  // namespace thinness
