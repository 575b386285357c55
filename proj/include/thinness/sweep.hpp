#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thinness/ordering.hpp"

namespace thinness {

// Cross-checks between independently computed quantities over enumerated or sampled graphs.
struct SweepOptions {
  int n = 6;                // largest vertex count
  int samples = 500;        // sampled theorems
  int orders = 200;         // perfection: random orders per graph
  std::uint64_t seed = 1;
  Budget budget;            // per solver call
};

struct SweepRow {
  int n = 0;
  std::uint64_t checked = 0, failed = 0;
};

struct SweepReport {
  std::string theorem;
  std::vector<SweepRow> rows;
  std::vector<std::string> mismatches;  // first few, human readable
  std::uint64_t checked = 0, failed = 0;
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

std::vector<std::string> sweep_theorems();
SweepReport run_sweep(const std::string& theorem, const SweepOptions& opt);

}  // namespace thinness
