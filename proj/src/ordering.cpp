#include "thinness/ordering.hpp"

#include <algorithm>

namespace thinness {

std::string to_string(ConsistencyMode m) { return m == ConsistencyMode::strong ? "strong" : "consistent"; }

ConsistencyMode parse_mode(const std::string& s) {
  if (s == "consistent") return ConsistencyMode::consistent;
  if (s == "strong" || s == "strongly_consistent") return ConsistencyMode::strong;
  throw InputError("unknown consistency mode: " + s);
}

ThinnessKind ThinnessKind::parse(const std::string& s) {
  if (s == "thin") return thin();
  if (s == "pthin") return pthin();
  if (s == "indthin") return indthin();
  if (s == "indpthin") return indpthin();
  throw InputError("unknown thinness kind: " + s);
}

std::string ThinnessKind::name() const {
  if (independent) return proper ? "indpthin" : "indthin";
  return proper ? "pthin" : "thin";
}

ConsistencyReport is_consistent(const Graph& g, const Representation& rep, ConsistencyMode mode) {
  validate_order(rep.order, g.n());
  if (static_cast<int>(rep.partition.class_of.size()) != g.n())
    throw InputError("partition size does not match vertex count");
  const auto& seq = rep.order.seq;
  const auto& cls = rep.partition.class_of;
  const int n = g.n();
  ConsistencyReport rep_out;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      int vr = seq[static_cast<std::size_t>(r)], vs = seq[static_cast<std::size_t>(s)];
      if (cls[static_cast<std::size_t>(vr)] != cls[static_cast<std::size_t>(vs)]) continue;
      for (int t = s + 1; t < n; ++t) {
        int vt = seq[static_cast<std::size_t>(t)];
        if (g.adjacent(vt, vr) && !g.adjacent(vt, vs)) {
          rep_out.ok = false;
          rep_out.witness = Violation{{vr, vs, vt}, false};
          return rep_out;
        }
      }
    }
  if (mode == ConsistencyMode::strong) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int va = seq[static_cast<std::size_t>(a)], vb = seq[static_cast<std::size_t>(b)];
        if (g.adjacent(va, vb)) continue;
        for (int c = b + 1; c < n; ++c) {
          int vc = seq[static_cast<std::size_t>(c)];
          if (cls[static_cast<std::size_t>(vb)] == cls[static_cast<std::size_t>(vc)] && g.adjacent(va, vc)) {
            rep_out.ok = false;
            rep_out.witness = Violation{{va, vb, vc}, true};
            return rep_out;
          }
        }
      }
  }
  return rep_out;
}

Graph conflict_graph(const Graph& g, const VertexOrder& order, ConsistencyMode mode) {
  validate_order(order, g.n());
  const int n = g.n();
  const auto& seq = order.seq;
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int v = seq[static_cast<std::size_t>(i)], w = seq[static_cast<std::size_t>(j)];
      bool edge = false;
      for (int z = j + 1; z < n && !edge; ++z) {
        int vz = seq[static_cast<std::size_t>(z)];
        edge = g.adjacent(vz, v) && !g.adjacent(vz, w);
      }
      if (mode == ConsistencyMode::strong)
        for (int x = 0; x < i && !edge; ++x) {
          int vx = seq[static_cast<std::size_t>(x)];
          edge = g.adjacent(vx, w) && !g.adjacent(vx, v);
        }
      if (edge) h.add_edge(v, w);
    }
  return h;
}

namespace {

struct CliqueSearch {
  const Graph& h;
  int best = 0;

  void expand(std::vector<int>& cand, int size) {
    // Greedy colouring bound over the candidate list.
    std::vector<int> order, bound;
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool ok = true;
        for (int u : classes[c])
          if (h.adjacent(u, v)) {
            ok = false;
            break;
          }
        if (ok) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[static_cast<std::size_t>(i)] <= best) return;
      int v = order[static_cast<std::size_t>(i)];
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (h.adjacent(v, order[static_cast<std::size_t>(j)])) next.push_back(order[static_cast<std::size_t>(j)]);
      if (next.empty()) {
        best = std::max(best, size + 1);
      } else {
        expand(next, size + 1);
      }
    }
  }
};

struct ColorSearch {
  const Graph& h;
  const std::vector<int>& seq;
  std::vector<std::vector<int>> earlier;  // earlier neighbours by step
  std::vector<int> color;
  int k = 0;

  bool run(std::size_t step, int used) {
    if (step == seq.size()) return true;
    int v = seq[step];
    std::uint64_t blocked = 0;
    for (int u : earlier[step]) blocked |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1U) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (run(step + 1, std::max(used, c + 1))) return true;
    }
    color[static_cast<std::size_t>(v)] = -1;
    return false;
  }
};

}  // namespace

int clique_number(const Graph& h) {
  if (h.n() == 0) return 0;
  CliqueSearch s{h};
  std::vector<int> cand(static_cast<std::size_t>(h.n()));
  for (int v = 0; v < h.n(); ++v) cand[static_cast<std::size_t>(v)] = v;
  s.expand(cand, 0);
  return s.best;
}

std::vector<int> min_coloring(const Graph& h, const std::vector<int>& sequence) {
  const int n = h.n();
  if (static_cast<int>(sequence.size()) != n) throw InputError("colouring sequence must list every vertex");
  if (n == 0) return {};
  ColorSearch s{h, sequence, {}, std::vector<int>(static_cast<std::size_t>(n), -1)};
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(sequence[static_cast<std::size_t>(i)])] = i;
  s.earlier.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int u : h.neighbors(sequence[static_cast<std::size_t>(i)]))
      if (pos[static_cast<std::size_t>(u)] < i) s.earlier[static_cast<std::size_t>(i)].push_back(u);
  int lo = std::max(1, clique_number(h));
  for (int k = lo; k <= n; ++k) {
    if (k > 64) throw InputError("colouring needs more than 64 colours");
    s.k = k;
    std::fill(s.color.begin(), s.color.end(), -1);
    if (s.run(0, 0)) return s.color;
  }
  return s.color;  // unreachable: k = n always succeeds
}

Partition min_classes_for_order(const Graph& g, const VertexOrder& order, ConsistencyMode mode, bool independent) {
  Graph h = conflict_graph(g, order, mode);
  if (independent)
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
  auto col = min_coloring(h, order.seq);
  Partition p;
  p.class_of = col;
  p.k = 0;
  for (int c : col) p.k = std::max(p.k, c + 1);
  return p;
}

CertificateCheck check_certificate(const Graph& g, const Representation& rep, ThinnessKind kind) {
  CertificateCheck out;
  try {
    validate_representation(rep, g.n());
  } catch (const InputError& e) {
    out.ok = false;
    out.reason = e.what();
    return out;
  }
  if (kind.independent)
    for (auto [u, v] : g.edges())
      if (rep.partition.class_of[static_cast<std::size_t>(u)] == rep.partition.class_of[static_cast<std::size_t>(v)]) {
        out.ok = false;
        out.reason = "class " + std::to_string(rep.partition.class_of[static_cast<std::size_t>(u)]) +
                     " is not independent: edge " + g.name(u) + "-" + g.name(v);
        return out;
      }
  auto r = is_consistent(g, rep, kind.mode());
  if (!r.ok) {
    out.ok = false;
    out.witness = r.witness;
    const auto& t = r.witness->triple;
    out.reason = std::string(r.witness->reverse ? "reverse order" : "order") + " violates consistency at (" +
                 g.name(t[0]) + ", " + g.name(t[1]) + ", " + g.name(t[2]) + ")";
  }
  return out;
}

bool verify_certificate(const Graph& g, const Representation& rep, ThinnessKind kind) {
  return check_certificate(g, rep, kind).ok;
}

nlohmann::json certificate_to_json(const Representation& rep, ThinnessKind kind) {
  nlohmann::json j;
  j["order"] = rep.order.seq;
  j["classes"] = rep.partition.class_of;
  j["kind"] = kind.name();
  j["k"] = rep.partition.k;
  return j;
}

Representation certificate_from_json(const nlohmann::json& j, ThinnessKind* kind_out) {
  if (!j.is_object() || !j.contains("order") || !j.contains("classes"))
    throw InputError("certificate json: needs 'order' and 'classes'");
  Representation rep;
  try {
    rep.order.seq = j["order"].get<std::vector<int>>();
    rep.partition.class_of = j["classes"].get<std::vector<int>>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("certificate json: 'order' and 'classes' must be integer arrays");
  }
  int k = 0;
  for (int c : rep.partition.class_of) k = std::max(k, c + 1);
  rep.partition.k = k;
  if (j.contains("k")) {
    if (!j["k"].is_number_integer()) throw InputError("certificate json: 'k' must be an integer");
    if (j["k"].get<int>() != k) throw InputError("certificate json: 'k' disagrees with the classes");
  }
  ThinnessKind kind = ThinnessKind::thin();
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw InputError("certificate json: 'kind' must be a string");
    kind = ThinnessKind::parse(j["kind"].get<std::string>());
  }
  if (kind_out) *kind_out = kind;
  return rep;
}

}  // namespace thinness

namespace thinness {

RandomInstance random_consistent_instance(int n, int k, bool independent, std::mt19937_64& rng) {
  if (k < 1 || n < 0) throw InputError("random_consistent_instance: need k >= 1");
  RandomInstance out;
  out.graph = Graph(n);
  out.rep.order = random_order(n, rng);
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cls[static_cast<std::size_t>(i)] = i < k ? i : static_cast<int>(rng() % static_cast<unsigned>(k));
  std::shuffle(cls.begin(), cls.end(), rng);
  out.rep.partition = compact_partition(cls);
  std::vector<std::vector<int>> seen(static_cast<std::size_t>(out.rep.partition.k));
  for (int t : out.rep.order.seq) {
    const int ct = out.rep.partition.class_of[static_cast<std::size_t>(t)];
    for (int c = 0; c < out.rep.partition.k; ++c) {
      auto& earlier = seen[static_cast<std::size_t>(c)];
      if (independent && c == ct) continue;
      // Suffix lengths skew short so that sparse and dense instances both appear.
      const std::size_t len = rng() % (earlier.size() + 1);
      const std::size_t take = rng() % 2 ? len : rng() % (len + 1);
      for (std::size_t i = earlier.size() - take; i < earlier.size(); ++i) out.graph.add_edge(t, earlier[i]);
    }
    seen[static_cast<std::size_t>(ct)].push_back(t);
  }
  return out;
}

}  // namespace thinness
