#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cubemedian {

// Plain undirected graph as parsed from a document. Vertices are dense
// indices; names are kept for I/O and error messages.
struct Graph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(names.size()); }

  static Graph with_default_names(int n, std::vector<std::pair<int, int>> edges);
};

// Sorted adjacency lists. Throws on loops, parallel edges, or out-of-range
// endpoints.
std::vector<std::vector<int>> build_adjacency(const Graph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src);

bool is_connected(const std::vector<std::vector<int>>& adj);

// Checks that phi (a vertex map given as an image vector) is a graph
// automorphism; throws NotAutomorphism otherwise.
void check_automorphism(const Graph& g, const std::vector<std::vector<int>>& adj,
                        const std::vector<int>& phi);

}  // namespace cubemedian
