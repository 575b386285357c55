#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "thinness/ordering.hpp"

namespace thinness {

// Axis-parallel closed rectangle. Coordinates are doubled so half units stay exact.
struct Box {
  int v = 0;
  int x1 = 0, x2 = 0, y1 = 0, y2 = 0;
  int cls = 0;  // 0 untagged, otherwise 1 or 2
};

struct BoxModel {
  std::vector<Box> boxes;  // boxes[i].v == i after validation
  int d1 = 0, d2 = 0;      // doubled diagonal offsets
};

// A model predicate failed; carries the predicate name and a violating pair when there is one.
class PreconditionError : public InputError {
 public:
  PreconditionError(std::string predicate, std::optional<std::pair<int, int>> witness, const std::string& what)
      : InputError(what), predicate_(std::move(predicate)), witness_(witness) {}
  const std::string& predicate() const { return predicate_; }
  const std::optional<std::pair<int, int>>& witness() const { return witness_; }

 private:
  std::string predicate_;
  std::optional<std::pair<int, int>> witness_;
};

void validate_box_model(const BoxModel& m);
// Sorts boxes by vertex and validates.
BoxModel normalized(BoxModel m);

Graph intersection_graph(const BoxModel& m);

enum class DiagonalLabel { two_diagonal, weakly_two_diagonal, neither };
std::string to_string(DiagonalLabel l);

struct DiagonalReport {
  DiagonalLabel label = DiagonalLabel::neither;
  int d1 = 0, d2 = 0;                               // offsets y2 - x2 of the two diagonals, doubled
  std::vector<char> upper;                          // per vertex: corner on the upper diagonal
  std::optional<std::pair<int, int>> duplicate;     // two boxes sharing an upper-right corner
  std::string reason;
};

DiagonalReport check_diagonal(const BoxModel& m);

struct PairCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> pair;
};

// Pairs are (upper-diagonal box, lower-diagonal box). Requires a 2-diagonal model.
PairCheck check_blocking(const BoxModel& m);
// Pairs are (smaller x2, larger x2) on one diagonal. Requires a weakly 2-diagonal model.
PairCheck check_bi_semi_proper(const BoxModel& m);

// Class 0 goes to the lower diagonal (tag 1), class 1 to the upper one (tag 2).
BoxModel build_m1(const Graph& g, const Representation& rep);
// Recentres so the lowest lower-diagonal x2 and the lowest upper-diagonal y2 sit on the
// axes, then clips every box to the closed third quadrant.
BoxModel build_m2(const BoxModel& m1);

// Lower diagonal = class 0, within-class order by x2, total order from the CEO solver.
Representation recover_representation(const BoxModel& m, ConsistencyMode mode);

nlohmann::json box_model_to_json(const BoxModel& m);
BoxModel box_model_from_json(const nlohmann::json& j);
std::string box_model_to_svg(const BoxModel& m);

}  // namespace thinness
