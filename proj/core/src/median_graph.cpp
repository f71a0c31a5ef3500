#include "cubemedian/median_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "cubemedian/errors.hpp"

namespace cubemedian {

namespace {

using DistMatrix = std::vector<std::vector<std::int32_t>>;

std::string triple_names(const Graph& g, int x, int y, int z) {
  return "(" + g.names[x] + ", " + g.names[y] + ", " + g.names[z] + ")";
}

// Number of vertices on geodesics between x and y, counted from distance
// rows. Used only to locate witness triples once a structural check failed.
int metric_median_count(const DistMatrix& dist, int x, int y, int z, int n) {
  int count = 0;
  const auto& dx = dist[x];
  const auto& dy = dist[y];
  const auto& dz = dist[z];
  const int dxy = dx[y], dyz = dy[z], dxz = dx[z];
  for (int w = 0; w < n; ++w) {
    if (dx[w] + dy[w] == dxy && dy[w] + dz[w] == dyz && dx[w] + dz[w] == dxz)
      if (++count > 1) return count;
  }
  return count;
}

[[noreturn]] void fail_with_witness_scan(const Graph& g, const DistMatrix& dist,
                                         const std::string& reason) {
  const int n = g.vertex_count();
  // First bad triple in lexicographic order. A non-median graph always has
  // one; the scan is only entered after a structural check already failed.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (metric_median_count(dist, x, y, z, n) != 1)
          throw NotMedianError("not a median graph (" + reason + "); witness triple " +
                                   triple_names(g, x, y, z),
                               {x, y, z});
  throw NotMedianError("not a median graph (" + reason +
                       "); no witness triple found at this scale");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MedianGraph MedianGraph::verify(Graph g, const VerifyOptions& opts) {
  MedianGraph out;
  const int n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::InvalidDocument, "graph has no vertices");
  if (static_cast<std::size_t>(n) > opts.max_vertices)
    throw Error(ErrorCode::TooLarge, "graph exceeds vertex cap (" +
                                         std::to_string(opts.max_vertices) + ")");
  auto adj = build_adjacency(g);

  {
    auto d0 = bfs_distances(adj, 0);
    for (int v = 0; v < n; ++v)
      if (d0[v] < 0)
        throw Error(ErrorCode::Disconnected, "graph is disconnected (vertex " +
                                                 g.names[v] + " unreachable)");
  }

  const int m = static_cast<int>(g.edges.size());
  const bool full = static_cast<std::size_t>(n) <= opts.full_check_limit;

  // Bipartite 2-coloring; median graphs are bipartite.
  std::vector<char> color(n, -1);
  {
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = static_cast<char>(1 - color[v]);
          stack.push_back(w);
        }
      }
    }
    for (auto [a, b] : g.edges)
      if (color[a] == color[b]) {
        DistMatrix dist(n);
        for (int v = 0; v < n; ++v) dist[v] = bfs_distances(adj, v);
        fail_with_witness_scan(g, dist, "odd cycle through " + g.names[a] + "--" + g.names[b]);
      }
  }

  std::vector<int> edge_class(m, -1);
  std::vector<std::array<Bits, 2>> class_sides;

  DistMatrix dist;
  if (full) {
    dist.resize(n);
    for (int v = 0; v < n; ++v) dist[v] = bfs_distances(adj, v);

    // Djokovic halfspaces per edge; edges with identical partitions form one
    // theta class. Bipartiteness rules out d(w,a) == d(w,b).
    std::unordered_map<Bits, int, BitsHash> side_key;
    for (int e = 0; e < m; ++e) {
      auto [a, b] = g.edges[e];
      Bits near_a(n);
      for (int w = 0; w < n; ++w)
        if (dist[a][w] < dist[b][w]) near_a.set(w);
      Bits side0 = near_a.test(0) ? near_a : ~near_a;
      auto it = side_key.find(side0);
      if (it == side_key.end()) {
        int id = static_cast<int>(class_sides.size());
        side_key.emplace(side0, id);
        class_sides.push_back({side0, ~side0});
        edge_class[e] = id;
      } else {
        edge_class[e] = it->second;
      }
    }
  } else {
    // Sampled regime: theta classes from the square-opposition closure,
    // validated per class by the two-component split.
    std::unordered_map<std::uint64_t, int> edge_id;
    auto ekey = [](int a, int b) {
      if (a > b) std::swap(a, b);
      return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    for (int e = 0; e < m; ++e) edge_id[ekey(g.edges[e].first, g.edges[e].second)] = e;

    UnionFind uf(m);
    std::vector<char> mark(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v : adj[u]) {
        if (v < u) continue;
        for (int w : adj[u]) {
          if (w == v) continue;
          // squares u-v-x-w with x adjacent to both v and w
          for (int x : adj[v]) {
            if (x == u) continue;
            if (!std::binary_search(adj[w].begin(), adj[w].end(), x)) continue;
            uf.unite(edge_id[ekey(u, v)], edge_id[ekey(w, x)]);
            uf.unite(edge_id[ekey(u, w)], edge_id[ekey(v, x)]);
          }
        }
      }
    }
    (void)mark;

    std::unordered_map<int, int> root_to_class;
    for (int e = 0; e < m; ++e) {
      int r = uf.find(e);
      auto it = root_to_class.find(r);
      if (it == root_to_class.end()) {
        root_to_class.emplace(r, static_cast<int>(root_to_class.size()));
      }
    }
    const int k = static_cast<int>(root_to_class.size());
    for (int e = 0; e < m; ++e) edge_class[e] = root_to_class[uf.find(e)];

    class_sides.assign(k, {Bits(n), Bits(n)});
    std::vector<std::vector<int>> class_edges(k);
    for (int e = 0; e < m; ++e) class_edges[edge_class[e]].push_back(e);
    for (int c = 0; c < k; ++c) {
      std::vector<char> cut(m, 0);
      for (int e : class_edges[c]) cut[e] = 1;
      std::vector<int> comp(n, -1);
      int ncomp = 0;
      for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        if (ncomp == 2)
          throw NotMedianError("theta class " + std::to_string(c) +
                               " does not split the graph into two halfspaces");
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (std::size_t i = 0; i < adj[v].size(); ++i) {
            int w = adj[v][i];
            int e = edge_id[ekey(v, w)];
            if (cut[e] || comp[w] >= 0) continue;
            comp[w] = ncomp;
            stack.push_back(w);
          }
        }
        ++ncomp;
      }
      if (ncomp != 2)
        throw NotMedianError("theta class " + std::to_string(c) +
                             " splits the graph into " + std::to_string(ncomp) +
                             " parts, expected 2");
      for (int v = 0; v < n; ++v)
        class_sides[c][comp[v] == comp[0] ? 0 : 1].set(v);
      for (int e : class_edges[c]) {
        auto [a, b] = g.edges[e];
        if (comp[a] == comp[b])
          throw NotMedianError("theta class " + std::to_string(c) +
                               " has an edge inside one halfspace");
      }
    }
  }

  const int k = static_cast<int>(class_sides.size());
  std::vector<Bits> labels(n, Bits(k));
  for (int c = 0; c < k; ++c)
    for (int v = static_cast<int>(class_sides[c][1].find_first());
         v < n; v = static_cast<int>(class_sides[c][1].find_next(v + 1)))
      labels[v].set(c);

  std::unordered_map<Bits, int, BitsHash> label_to_vertex;
  label_to_vertex.reserve(static_cast<std::size_t>(n) * 2);
  for (int v = 0; v < n; ++v) {
    if (!label_to_vertex.emplace(labels[v], v).second) {
      if (full) fail_with_witness_scan(g, dist, "two vertices share every halfspace");
      throw NotMedianError("two vertices share every halfspace: " + g.names[v]);
    }
  }

  // Isometry into the halfspace hypercube: d(x,y) == #separating classes.
  if (full) {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (static_cast<std::int32_t>(labels[x].hamming(labels[y])) != dist[x][y])
          fail_with_witness_scan(g, dist, "distance != separating class count for " +
                                              g.names[x] + "," + g.names[y]);
  } else {
    std::mt19937_64 rng(opts.sample_seed);
    std::size_t sources = std::max<std::size_t>(2, opts.sampled_triples / n);
    sources = std::min<std::size_t>(sources, n);
    for (std::size_t s = 0; s < sources; ++s) {
      int src = static_cast<int>(rng() % n);
      auto d = bfs_distances(adj, src);
      for (int v = 0; v < n; ++v)
        if (static_cast<int>(labels[src].hamming(labels[v])) != d[v])
          throw NotMedianError("distance != separating class count for " +
                               g.names[src] + "," + g.names[v]);
    }
  }

  // Medianness: every triple's majority label must be realized.
  {
    Bits maj(k);
    auto check_triple = [&](int x, int y, int z) {
      Bits::majority3(maj, labels[x], labels[y], labels[z]);
      if (label_to_vertex.find(maj) == label_to_vertex.end())
        throw NotMedianError(
            "no median for triple " + triple_names(g, x, y, z), {x, y, z});
    };
    if (full) {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          for (int z = y + 1; z < n; ++z) check_triple(x, y, z);
    } else {
      std::mt19937_64 rng(opts.sample_seed ^ 0x7472697065ULL);
      for (std::size_t i = 0; i < opts.sampled_triples; ++i)
        check_triple(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                     static_cast<int>(rng() % n));
    }
  }

  // Full mode also certifies the two-component split per class.
  if (full) {
    for (int c = 0; c < k; ++c) {
      UnionFind uf(n);
      for (int e = 0; e < m; ++e)
        if (edge_class[e] != c) uf.unite(g.edges[e].first, g.edges[e].second);
      for (int v = 0; v < n; ++v) {
        int want = class_sides[c][0].test(v) ? uf.find(static_cast<int>(class_sides[c][0].find_first()))
                                             : uf.find(static_cast<int>(class_sides[c][1].find_first()));
        if (uf.find(v) != want)
          fail_with_witness_scan(g, dist, "halfspace of class " + std::to_string(c) +
                                              " is not connected");
      }
    }
  }

  out.graph_ = std::move(g);
  out.adj_ = std::move(adj);
  out.edge_class_ = std::move(edge_class);
  out.class_sides_ = std::move(class_sides);
  out.labels_ = std::move(labels);
  out.label_to_vertex_ = std::move(label_to_vertex);
  out.sampled_ = !full;
  return out;
}

std::optional<int> MedianGraph::vertex_with_label(const Bits& lab) const {
  auto it = label_to_vertex_.find(lab);
  if (it == label_to_vertex_.end()) return std::nullopt;
  return it->second;
}

int MedianGraph::median(int x, int y, int z) const {
  Bits maj(theta_class_count());
  Bits::majority3(maj, labels_[x], labels_[y], labels_[z]);
  auto it = label_to_vertex_.find(maj);
  if (it == label_to_vertex_.end())
    throw NotMedianError("no median for triple " + triple_names(graph_, x, y, z),
                         {x, y, z});
  return it->second;
}

Bits MedianGraph::interval_bits(int x, int y) const {
  const int n = vertex_count();
  Bits lower = labels_[x] & labels_[y];
  Bits upper = labels_[x] | labels_[y];
  Bits out(n);
  for (int z = 0; z < n; ++z)
    if (lower.is_subset_of(labels_[z]) && labels_[z].is_subset_of(upper)) out.set(z);
  return out;
}

bool MedianGraph::is_convex(const Bits& subset) const {
  const int n = vertex_count();
  for (int x = static_cast<int>(subset.find_first()); x < n;
       x = static_cast<int>(subset.find_next(x + 1)))
    for (int y = static_cast<int>(subset.find_next(x + 1)); y < n;
         y = static_cast<int>(subset.find_next(y + 1)))
      if (!interval_bits(x, y).is_subset_of(subset)) return false;
  return true;
}

std::vector<int> MedianGraph::shortest_path(int x, int y) const {
  std::vector<int> path{x};
  int cur = x;
  while (cur != y) {
    int d = distance(cur, y);
    for (int nb : adj_[cur]) {  // adjacency is sorted, first hit is lex-least
      if (distance(nb, y) == d - 1) {
        cur = nb;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::pair<int, bool> MedianGraph::class_image(const std::vector<int>& phi, int cls) const {
  // Any edge of the class determines the image class.
  for (int e = 0; e < edge_count(); ++e) {
    if (edge_class_[e] != cls) continue;
    auto [a, b] = graph_.edges[e];
    int ia = phi[a], ib = phi[b];
    // find edge (ia, ib)
    for (int f = 0; f < edge_count(); ++f) {
      auto [u, v] = graph_.edges[f];
      if ((u == ia && v == ib) || (u == ib && v == ia)) {
        int c2 = edge_class_[f];
        bool swapped = false;
        if (c2 == cls) swapped = side_of(cls, a) != side_of(cls, ia);
        return {c2, swapped};
      }
    }
    throw Error(ErrorCode::NotAutomorphism, "map does not send edges to edges");
  }
  throw Error(ErrorCode::Internal, "theta class has no edges");
}

int MedianGraph::diameter() const {
  const int n = vertex_count();
  int best = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) best = std::max(best, distance(x, y));
  return best;
}

int MedianGraph::automorphism_order(const std::vector<int>& phi, int cap) {
  const int n = static_cast<int>(phi.size());
  std::vector<int> cur = phi;
  auto is_id = [&] {
    for (int i = 0; i < n; ++i)
      if (cur[i] != i) return false;
    return true;
  };
  int order = 1;
  while (!is_id()) {
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = phi[cur[i]];
    cur = std::move(next);
    if (++order > cap)
      throw Error(ErrorCode::TooLarge, "automorphism order exceeds cap");
  }
  return order;
}

AxiomCheckResult check_median_axioms(const MedianGraph& g, std::uint64_t quad_budget,
                                     std::uint64_t seed) {
  AxiomCheckResult res;
  const int n = g.vertex_count();

  for (int x = 0; x < n && res.ok; ++x)
    for (int y = 0; y < n; ++y) {
      ++res.evaluations;
      if (g.median(x, y, y) != y) {
        res.ok = false;
        res.which = "mu(x,y,y)=y";
        res.witness = {x, y, y, -1};
        break;
      }
    }
  if (!res.ok) return res;

  for (int x = 0; x < n && res.ok; ++x)
    for (int y = x; y < n && res.ok; ++y)
      for (int z = y; z < n; ++z) {
        ++res.evaluations;
        int a = g.median(x, y, z);
        if (a != g.median(z, x, y) || a != g.median(x, z, y)) {
          res.ok = false;
          res.which = "symmetry";
          res.witness = {x, y, z, -1};
          break;
        }
      }
  if (!res.ok) return res;

  auto axiom3 = [&](int x, int w, int y, int z) {
    ++res.evaluations;
    return g.median(g.median(x, w, y), w, z) == g.median(x, w, g.median(y, w, z));
  };
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n * n;
  if (total <= quad_budget) {
    for (int x = 0; x < n; ++x)
      for (int w = 0; w < n; ++w)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (!axiom3(x, w, y, z)) {
              res.ok = false;
              res.which = "associativity";
              res.witness = {x, w, y, z};
              return res;
            }
  } else {
    res.quadruples_sampled = true;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < quad_budget; ++i) {
      int x = static_cast<int>(rng() % n), w = static_cast<int>(rng() % n),
          y = static_cast<int>(rng() % n), z = static_cast<int>(rng() % n);
      if (!axiom3(x, w, y, z)) {
        res.ok = false;
        res.which = "associativity";
        res.witness = {x, w, y, z};
        return res;
      }
    }
  }
  return res;
}

}  // namespace cubemedian
