#include "cubemedian/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cubemedian/errors.hpp"

namespace cubemedian {

Graph Graph::with_default_names(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.names.reserve(n);
  for (int i = 0; i < n; ++i) g.names.push_back("v" + std::to_string(i));
  g.edges = std::move(edges);
  return g;
}

std::vector<std::vector<int>> build_adjacency(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorCode::InvalidDocument, "edge endpoint out of range");
    if (a == b)
      throw Error(ErrorCode::InvalidDocument, "loop edge at " + g.names[a]);
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw Error(ErrorCode::InvalidDocument,
                  "parallel edge " + g.names[a] + "--" + g.names[b]);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

bool is_connected(const std::vector<std::vector<int>>& adj) {
  if (adj.empty()) return false;
  auto d = bfs_distances(adj, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

void check_automorphism(const Graph& g, const std::vector<std::vector<int>>& adj,
                        const std::vector<int>& phi) {
  const int n = g.vertex_count();
  if (static_cast<int>(phi.size()) != n)
    throw Error(ErrorCode::NotAutomorphism, "vertex map has wrong size");
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    if (phi[v] < 0 || phi[v] >= n || hit[phi[v]])
      throw Error(ErrorCode::NotAutomorphism, "vertex map is not a bijection");
    hit[phi[v]] = 1;
  }
  for (auto [a, b] : g.edges) {
    const auto& nb = adj[phi[a]];
    if (!std::binary_search(nb.begin(), nb.end(), phi[b]))
      throw Error(ErrorCode::NotAutomorphism,
                  "map does not preserve edge " + g.names[a] + "--" + g.names[b]);
  }
}

}  // namespace cubemedian
