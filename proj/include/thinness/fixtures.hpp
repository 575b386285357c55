#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinness/boxmodel.hpp"
#include "thinness/vpg.hpp"

namespace thinness {

struct KnownFact {
  std::string property;
  std::string value;
  std::string tag;  // "checked" or "unverified-citation"
};

struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
  std::vector<KnownFact> facts;
  std::optional<Representation> certificate;
  ThinnessKind certificate_kind;
  std::optional<BoxModel> boxes;
  std::optional<GridPathModel> paths;

  // Value of a fact, or nothing when absent.
  std::optional<std::string> fact(const std::string& property) const;
};

Fixture fig1a();
Fixture fig1b();
Fixture g72();
Fixture grid(int r);
Fixture b0vpg_grid(int r);
Fixture complete_bipartite(int a, int b);
Fixture wheel4();
Fixture subdivided_k5();
Fixture cycle(int n);
Fixture bipartite_claw();
Fixture octahedron();

// "fig1a", "grid:3", "complete_bipartite:3,3", "cycle:6", ...
Fixture make_fixture(const std::string& spec);
std::vector<std::string> fixture_names();

// FNV-1a over n and the sorted edge list.
std::uint64_t graph_checksum(const Graph& g);

}  // namespace thinness
