#pragma once

// Brute-force reference implementations, independent of the library's
// theta-class machinery. Expected values in the tests come from these.

#include <optional>
#include <vector>

#include "cubemedian/bits.hpp"
#include "cubemedian/graph.hpp"
#include "cubemedian/grid_product.hpp"
#include "cubemedian/wallspace.hpp"

namespace oracle {

using cubemedian::Bits;
using cubemedian::Graph;
using cubemedian::GridVec;
using cubemedian::ProductIsometry;
using cubemedian::Wallspace;

// Plain BFS all-pairs distances from the edge list alone.
std::vector<std::vector<int>> all_distances(const Graph& g);

// Vertices on geodesics between x and y, from the distance matrix.
std::vector<int> metric_interval(const std::vector<std::vector<int>>& dist, int x, int y);

// The unique metric median of a triple, when it exists.
std::optional<int> metric_median(const std::vector<std::vector<int>>& dist, int x, int y,
                                 int z);
// Number of metric medians (0, 1, or >1 capped at 2).
int metric_median_count(const std::vector<std::vector<int>>& dist, int x, int y, int z);

// Whether all triples have exactly one metric median.
bool is_median_by_triples(const Graph& g);

// All consistent orientations by filtering every one of the 2^walls subsets.
std::vector<Bits> consistent_orientations(const Wallspace& w);

// Exhaustive graph isomorphism for small graphs (backtracking on degrees).
bool graphs_isomorphic(const Graph& a, const Graph& b);

// All automorphisms of a small graph, as image vectors (lexicographic).
std::vector<std::vector<int>> all_automorphisms(const Graph& g, std::size_t cap = 100000);

// Every vertex subset of a small graph that induces a hypercube 1-skeleton.
std::vector<std::vector<int>> hypercube_subgraphs(const Graph& g);

// Window brute force over finite vertices x grid box with int64 arithmetic.
long long window_min_displacement(const ProductIsometry& g, long long radius);
std::vector<std::pair<int, std::vector<long long>>> window_minset(const ProductIsometry& g,
                                                                  long long radius);

// mu-closure computed with metric medians only.
std::vector<int> closure_by_metric_medians(const Graph& g, std::vector<int> seed);

// All walls of a member set with both sides convex for the metric intervals
// restricted to the members (the intrinsic-walls reference).
std::vector<std::pair<std::vector<int>, std::vector<int>>> convex_wall_partitions(
    const Graph& g, const std::vector<int>& members);

}  // namespace oracle
