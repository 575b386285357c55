#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinness/ordering.hpp"

namespace thinness {

enum class PatternFlavor { plain, bicolored, bipartite };
std::string to_string(PatternFlavor f);

// Ordered trigraph pattern on vertices 0..size-1. Pairs listed in neither set are undecided.
// Bipartite patterns put the unprimed side first: 0..side_a-1, then the primed side.
struct Pattern {
  std::string name;
  PatternFlavor flavor = PatternFlavor::plain;
  int size = 0;
  int side_a = 0;           // bipartite only
  std::vector<char> white;  // bicolored only, one flag per vertex
  std::vector<Edge> edges, nonedges;

  bool operator==(const Pattern& o) const;
};

struct PatternFamily {
  std::string name;
  std::vector<Pattern> patterns;
  PatternFlavor flavor() const { return patterns.empty() ? PatternFlavor::plain : patterns.front().flavor; }
};

void validate_pattern(const Pattern& p);

// P1..P9, Q1..Q4, R1..R4 and R4'.
const std::vector<Pattern>& builtin_patterns();
const Pattern& builtin_pattern(const std::string& name);

// "P6789", "P1", "R12", "R4'", or comma/plus separated names such as "P5,P6,P9".
PatternFamily parse_family(const std::string& spec);

// pattern plain 4; edge 1 3; edge 2 4; nonedge 2 3
// pattern bicolored 3; white 3; edge 1 3; nonedge 2 3
// pattern bipartite 2 2; edge 1 2'; edge 2 1'; nonedge 1 1'
// Statements end at ';' or a newline; '#' comments out the rest of a line; an optional
// "name X" statement labels the pattern; every "pattern" statement starts a new one.
std::vector<Pattern> parse_pattern_dsl(const std::string& text);
std::string to_dsl(const Pattern& p);

// Per-side orders of a bipartite graph; a is matched by the unprimed side.
struct SideOrders {
  std::vector<int> a, b;
};

// Each returns the realizing tuple, indexed by pattern vertex, or nothing.
std::optional<std::vector<int>> occurs(const Graph& g, const VertexOrder& order, const Pattern& p);
std::optional<std::vector<int>> occurs(const Graph& g, const VertexOrder& order, const std::vector<int>& colour,
                                       const Pattern& p);  // colour 1 = white
std::optional<std::vector<int>> occurs(const Graph& g, const SideOrders& sides, const Pattern& p);

struct MembershipResult {
  enum class Status { member, non_member, budget_exceeded };
  Status status = Status::non_member;
  VertexOrder order;        // plain and bicolored
  std::vector<int> colour;  // bicolored
  SideOrders sides;         // bipartite
  std::uint64_t nodes = 0;
  double seconds = 0;
};

std::string to_string(MembershipResult::Status s);

// Left-to-right placement search; a prefix is dropped as soon as a pattern ends at its
// newest vertex. Bicolored and bipartite families try every bipartition of g.
MembershipResult ord_membership(const Graph& g, const PatternFamily& family, const Budget& budget = {});

struct ClassReport {
  std::string cls;
  std::string family;
  MembershipResult result;
};

// interval, proper_interval, two_thin, independent_two_thin, proper_independent_two_thin, monotone_l.
// independent_two_thin is decided by the bipartite family R2,R3. The plain family P5,P6,P9 admits
// C6 (order 0,2,1,4,3,5) although C6 is not independent 2-thin; it is reported as ord_p569.
std::vector<ClassReport> classify(const Graph& g, const Budget& budget = {});

}  // namespace thinness
