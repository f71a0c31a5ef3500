#pragma once

#include <string>
#include <vector>

#include "cubemedian/median_graph.hpp"

namespace cubemedian {

// Graphviz export: edges colored by theta class; optionally marked vertices
// (e.g. a minset) drawn filled.
std::string export_dot(const MedianGraph& g, const std::vector<int>& marked = {});

}  // namespace cubemedian
