#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubemedian/action.hpp"
#include "cubemedian/graph.hpp"

namespace cubemedian {

// Built-in inputs: small graphs and the worked actions used across the test
// and CLI surfaces.
struct Fixture {
  std::string name;
  std::string description;
  bool is_action = false;
  Graph graph;                          // when !is_action
  std::optional<AbelianAction> action;  // when is_action
};

std::vector<std::string> fixture_names();
Fixture build_fixture(const std::string& name);

// The worked C x Z example: g and h reflect the two diagonals of the square
// and translate the line. Claims checked: both loxodromic, Min g and Min h
// disjoint, Min g meets Min h^2, and the minimal common power is 2.
struct PaperExampleReport {
  IsometryKind g_kind = IsometryKind::Elliptic;
  IsometryKind h_kind = IsometryKind::Elliptic;
  BigInt g_norm = 0, h_norm = 0;
  bool min_g_h_disjoint = false;
  bool min_g_h2_nonempty = false;
  bool common_power_is_2 = false;
  int common_power = 0;
  std::optional<ProductVertex> witness;
  bool ok() const {
    return g_kind == IsometryKind::Loxodromic && h_kind == IsometryKind::Loxodromic &&
           min_g_h_disjoint && min_g_h2_nonempty && common_power_is_2;
  }
};
PaperExampleReport run_paper_example_checks(const AbelianAction& a);

// Do Min g and Min h intersect (finite parts as sets, grid parts as
// constraint systems)?
bool minsets_intersect(const ProductIsometry& g, const ProductIsometry& h);

}  // namespace cubemedian
