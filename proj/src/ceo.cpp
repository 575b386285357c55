#include "thinness/ceo.hpp"

#include <algorithm>

#include "thinness/graph_io.hpp"

namespace thinness {

void validate_class_order(const Partition& p, const ClassOrder& porder, int n) {
  if (static_cast<int>(p.class_of.size()) != n) throw InputError("partition size does not match vertex count");
  if (static_cast<int>(porder.class_orders.size()) != p.k)
    throw InputError("class order count does not match the number of classes");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < p.k; ++c)
    for (int v : porder.class_orders[static_cast<std::size_t>(c)]) {
      if (v < 0 || v >= n) throw InputError("class order entry out of range");
      if (p.class_of[static_cast<std::size_t>(v)] != c)
        throw InputError("vertex " + std::to_string(v) + " listed in the order of class " + std::to_string(c) +
                         " but belongs to class " + std::to_string(p.class_of[static_cast<std::size_t>(v)]));
      if (seen[static_cast<std::size_t>(v)]) throw InputError("class order repeats a vertex");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)]) throw InputError("class order is not total: vertex " + std::to_string(v) + " missing");
}

Digraph build_ceo_digraph(const Graph& g, const Partition& partition, const ClassOrder& porder, ConsistencyMode mode) {
  const int n = g.n();
  validate_class_order(partition, porder, n);
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (const auto& co : porder.class_orders)
    for (std::size_t i = 0; i < co.size(); ++i) rank[static_cast<std::size_t>(co[i])] = static_cast<int>(i);
  Digraph d(n);
  for (const auto& co : porder.class_orders)
    for (std::size_t i = 0; i < co.size(); ++i)
      for (std::size_t j = i + 1; j < co.size(); ++j) d.add_arc(co[i], co[j]);
  const auto& cls = partition.class_of;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int cu = cls[static_cast<std::size_t>(u)], cv = cls[static_cast<std::size_t>(v)];
      if (cu == cv || g.adjacent(u, v)) continue;
      bool arc = false;
      // some v' before v in v's class is adjacent to u
      for (int w : porder.class_orders[static_cast<std::size_t>(cv)]) {
        if (rank[static_cast<std::size_t>(w)] >= rank[static_cast<std::size_t>(v)]) break;
        if (g.adjacent(u, w)) {
          arc = true;
          break;
        }
      }
      // some u' after u in u's class is adjacent to v
      if (!arc && mode == ConsistencyMode::strong)
        for (int w : porder.class_orders[static_cast<std::size_t>(cu)])
          if (rank[static_cast<std::size_t>(w)] > rank[static_cast<std::size_t>(u)] && g.adjacent(w, v)) {
            arc = true;
            break;
          }
      if (arc) d.add_arc(u, v);
    }
  return d;
}

CeoResult solve_ceo(const Graph& g, const Partition& partition, const ClassOrder& porder, ConsistencyMode mode) {
  validate_class_order(partition, porder, g.n());
  CeoResult res;
  for (int c = 0; c < partition.k; ++c) {
    const auto& co = porder.class_orders[static_cast<std::size_t>(c)];
    Graph h = induced_subgraph(g, co);
    Representation local{VertexOrder::identity(h.n()), Partition::single(h.n())};
    auto rep = is_consistent(h, local, mode);
    if (!rep.ok) {
      res.status = CeoResult::Status::precondition_violated;
      res.violating_class = c;
      Violation v = *rep.witness;
      for (int& x : v.triple) x = co[static_cast<std::size_t>(x)];
      res.violation = v;
      return res;
    }
  }
  Digraph d = build_ceo_digraph(g, partition, porder, mode);
  TopoResult t = topological_sort(d);
  if (t.acyclic) {
    res.status = CeoResult::Status::feasible;
    res.order = std::move(t.order);
  } else {
    res.status = CeoResult::Status::infeasible;
    res.cycle = std::move(t.cycle);
  }
  return res;
}

nlohmann::json ceo_instance_to_json(const CeoInstance& inst) {
  nlohmann::json j;
  j["graph"] = graph_to_json(inst.graph);
  j["classes"] = inst.partition.class_of;
  j["class_orders"] = inst.porder.class_orders;
  j["mode"] = to_string(inst.mode);
  return j;
}

CeoInstance ceo_instance_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("classes") || !j.contains("class_orders"))
    throw InputError("ceo json: needs 'graph', 'classes' and 'class_orders'");
  CeoInstance inst;
  inst.graph = graph_from_json(j["graph"]);
  try {
    inst.partition.class_of = j["classes"].get<std::vector<int>>();
    inst.porder.class_orders = j["class_orders"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("ceo json: 'classes' and 'class_orders' must be integer arrays");
  }
  inst.partition.k = static_cast<int>(inst.porder.class_orders.size());
  if (j.contains("mode")) inst.mode = parse_mode(j["mode"].get<std::string>());
  validate_partition(inst.partition, inst.graph.n());
  validate_class_order(inst.partition, inst.porder, inst.graph.n());
  return inst;
}

}  // namespace thinness
