#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubemedian/grid_product.hpp"

namespace cubemedian {

// Unit-two-variable-per-inequality constraint a*v[i] + b*v[j] <= c with
// a, b in {-1, 0, +1}. Single-variable constraints use b = 0, j = -1.
struct Utvpi {
  int a = 0, i = -1, b = 0, j = -1;
  BigInt c = 0;
  bool satisfied(const GridVec& v) const;
};

struct ConstraintBranch {
  std::vector<Utvpi> constraints;
};

// Serialized per-cycle summary: "fixed" (point), "parity" (finite point
// union from an odd negative cycle), "linear" (free directions tied by
// difference relations).
struct CycleConstraintRecord {
  std::vector<int> coords;
  int sign = 1;
  BigInt net = 0;
  int parity = 0;
  std::string kind;
};

// Finite description of an argmin set over Z^k: a disjunction of UTVPI
// systems. Membership is decidable; any finite box enumerates.
struct GridConstraintSet {
  int rank = 0;
  std::vector<CycleConstraintRecord> cycle_records;
  std::vector<ConstraintBranch> branches;

  bool contains(const GridVec& v) const;
};

// The displacement argmin of a grid map, cycle by cycle.
GridConstraintSet grid_argmin(const SignedAffineMap& m);

// Integer feasibility with a model, via shortest paths on the doubled
// variable graph with parity tightening.
std::optional<GridVec> branch_model(const std::vector<Utvpi>& constraints, int rank);

// First feasible combined branch of the two sets, with its model.
std::optional<GridVec> intersection_model(const GridConstraintSet& a,
                                          const GridConstraintSet& b);
bool intersection_nonempty(const GridConstraintSet& a, const GridConstraintSet& b);

}  // namespace cubemedian
