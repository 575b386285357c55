#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "thinness/boxmodel.hpp"

namespace thinness {

using Point = std::pair<int, int>;  // doubled coordinates

// Axis-parallel polyline; consecutive segments alternate orientation.
struct GridPath {
  int v = 0;
  std::vector<Point> pts;
  int cls = 0;  // optional tag used for colouring
  int bends() const { return static_cast<int>(pts.size()) - 2; }
};

struct GridPathModel {
  std::vector<GridPath> paths;  // paths[i].v == i after validation
};

void validate_path_model(const GridPathModel& m);

// Removes zero-length segments and merges collinear neighbours. A path that collapses
// to a point keeps one point.
std::vector<Point> simplify_polyline(const std::vector<Point>& pts);

// "h", "v", "L", "mirror-L", "Gamma", "mirror-Gamma" (one bend, named by where the
// arms point from the corner), or "B<k>" for k bends.
std::string shape_tag(const GridPath& p);

Graph path_intersection_graph(const GridPathModel& m);

// Top and right sides of the M2 boxes, reflected through the origin. With independent
// set, class 0 keeps only its top side and class 1 its right side (zero bends).
GridPathModel build_m3(const Graph& g, const Representation& rep, bool independent = false);
// Monotone L-model: every corner on y = -x.
GridPathModel build_m4(const Graph& g, const Representation& rep);

// Prolongations are the rays from the corner through each arm. Requires one-bend paths.
PairCheck check_blocking_l(const GridPathModel& m);

// Three classes; at most 3 bends, at most 1 when every class is independent.
GridPathModel build_vpg_3thin(const Graph& g, const Representation& rep, bool independent = false);

nlohmann::json path_model_to_json(const GridPathModel& m);
GridPathModel path_model_from_json(const nlohmann::json& j);
std::string path_model_to_svg(const GridPathModel& m);

}  // namespace thinness
