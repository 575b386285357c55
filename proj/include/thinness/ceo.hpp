#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "thinness/ordering.hpp"

namespace thinness {

// Total order of each class; class_orders[c] lists the vertices of class c.
struct ClassOrder {
  std::vector<std::vector<int>> class_orders;
};

void validate_class_order(const Partition& p, const ClassOrder& porder, int n);

Digraph build_ceo_digraph(const Graph& g, const Partition& partition, const ClassOrder& porder, ConsistencyMode mode);

struct CeoResult {
  enum class Status { feasible, infeasible, precondition_violated };
  Status status = Status::infeasible;
  VertexOrder order;                  // feasible
  std::vector<int> cycle;             // infeasible: closed directed cycle v0..vk,v0
  int violating_class = -1;           // precondition_violated
  std::optional<Violation> violation; // precondition_violated
};

CeoResult solve_ceo(const Graph& g, const Partition& partition, const ClassOrder& porder, ConsistencyMode mode);

struct CeoInstance {
  Graph graph;
  Partition partition;
  ClassOrder porder;
  ConsistencyMode mode = ConsistencyMode::consistent;
};

nlohmann::json ceo_instance_to_json(const CeoInstance& inst);
CeoInstance ceo_instance_from_json(const nlohmann::json& j);

}  // namespace thinness
