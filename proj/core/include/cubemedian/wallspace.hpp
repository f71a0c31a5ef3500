#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubemedian/bits.hpp"
#include "cubemedian/median_graph.hpp"

namespace cubemedian {

// A finite set with a family of two-sided partitions. Walls are stored as
// ordered (A, B) pairs but compared as unordered partitions; orientation
// side tags refer to the stored order (side 0 = A, side 1 = B).
struct Wallspace {
  std::vector<std::string> elements;
  std::vector<std::array<Bits, 2>> walls;

  int element_count() const { return static_cast<int>(elements.size()); }
  int wall_count() const { return static_cast<int>(walls.size()); }
  // Walls separating elements s and t.
  int separation(int s, int t) const;
};

struct RawWall {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

// validate_wallspace: checks the partition invariants; rejects (rather than
// deduplicates) walls that repeat as unordered partitions.
Wallspace validate_wallspace(std::vector<std::string> elements,
                             const std::vector<RawWall>& walls);

struct CubulateOptions {
  std::size_t max_vertices = std::size_t{1} << 20;
  // An exhaustive recount of consistent orientations cross-checks the BFS
  // enumeration whenever 2^walls is within this budget.
  std::size_t exhaustive_recount_limit = std::size_t{1} << 16;
  VerifyOptions verify;
};

struct CubulationResult {
  MedianGraph complex;             // vertex i corresponds to orientations[i]
  std::vector<Bits> orientations;  // bit w set = wall w oriented to side B
  std::vector<int> principal;      // element -> vertex of its principal orientation
  bool recount_checked = false;    // exhaustive recount was run
  // Conditions that hold by construction for finite wallspaces, recorded for
  // the report: separation is finite, and the descending-chain condition is
  // vacuous.
  static constexpr const char* finite_separation = "by-construction";
  static constexpr const char* descending_chains = "vacuous-finite";
};

// Builds the dual complex: vertices are consistent orientations (one side per
// wall, pairwise intersecting), edges join orientations differing on exactly
// one wall. Vertex order is canonical by orientation bit-pattern.
CubulationResult cubulate(const Wallspace& w, const CubulateOptions& opts = {});

}  // namespace cubemedian
