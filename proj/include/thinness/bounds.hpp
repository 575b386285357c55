#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "thinness/ordering.hpp"

namespace thinness {

struct Labeling {
  std::vector<int> f;  // injective
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;
  int width() const;
};

struct DecompositionCheck {
  bool ok = true;      // conditions (1)-(3)
  bool proper = true;  // additionally no vertex interval strictly inside another
  std::string reason;
};

DecompositionCheck check_decomposition(const Graph& g, const PathDecomposition& pd);
// First and last bag index (0-based) of every vertex; requires a valid decomposition.
std::pair<std::vector<int>, std::vector<int>> bag_spans(const PathDecomposition& pd, int n);

void validate_labeling(const Labeling& f, int n);
int labeling_bandwidth(const Graph& g, const Labeling& f);

struct BandwidthResult {
  int value = 0;
  Labeling labeling;  // positions 0..n-1
};

BandwidthResult bandwidth(const Graph& g);  // n <= 12

struct PathwidthResult {
  int value = 0;
  PathDecomposition decomposition;
};

PathwidthResult pathwidth(const Graph& g);  // n <= 16

// Windows over label ranks: X_i = {v : i <= rank(v) <= i + b} for i = -b..n-1, where b is
// the rank bandwidth. Proper, width b <= labeling_bandwidth(g, f).
PathDecomposition proper_decomposition_from_labeling(const Graph& g, const Labeling& f);

// Order by first bag; each new vertex takes the smallest class not present in its bag.
// The classes are independent and consistent with the order (strongly when pd is proper).
Representation partition_from_decomposition(const Graph& g, const PathDecomposition& pd);

int iso_peak(const Graph& g);  // n <= 20
int diameter(const Graph& g);  // connected g

nlohmann::json decomposition_to_json(const PathDecomposition& pd);
PathDecomposition decomposition_from_json(const nlohmann::json& j);
nlohmann::json labeling_to_json(const Labeling& f);
Labeling labeling_from_json(const nlohmann::json& j);

}  // namespace thinness
