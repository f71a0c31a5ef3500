#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "cubemedian/median_graph.hpp"

namespace cubemedian {

// A cube is identified by its sorted corner list; `classes` are the theta
// classes it spans (dim = classes.size()).
struct Cube {
  std::vector<int> corners;
  std::vector<int> classes;
  int dim() const { return static_cast<int>(classes.size()); }
};

struct CubeSet {
  std::vector<Cube> cubes;  // sorted by corner list, lexicographically
  std::vector<std::pair<int, int>> facets;  // (cube, codim-1 face)

  int find(const std::vector<int>& sorted_corners) const;
  std::vector<std::size_t> count_by_dim() const;

  std::unordered_map<std::size_t, std::vector<int>> index_buckets;  // hash -> candidates
};

// All cubes of all dimensions, each exactly once: a cube exists wherever the
// 1-skeleton of one exists. 0-cubes are vertices, 1-cubes are edges.
CubeSet enumerate_cubes(const MedianGraph& g, std::size_t max_cubes = std::size_t{1} << 20);

// First cubical subdivision: one vertex per cube, edges along codim-1
// incidences. All distances double; vertex_image embeds the old vertices.
struct Subdivision {
  CubeSet cubes;
  MedianGraph graph;            // vertex i <-> cubes.cubes[i]
  std::vector<int> vertex_image;  // old vertex -> subdivision vertex
};
Subdivision subdivide(const MedianGraph& g, std::size_t max_cubes = std::size_t{1} << 20,
                      const VerifyOptions& verify = {});

// Induced permutation of cubes under a graph automorphism, as an
// automorphism of the subdivided graph. Throws NotAutomorphism.
std::vector<int> transport_automorphism(const MedianGraph& g, const Subdivision& sub,
                                        const std::vector<int>& phi);

}  // namespace cubemedian
