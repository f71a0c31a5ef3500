#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace oracle {

std::vector<std::vector<int>> all_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    dist[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push_back(w);
        }
    }
  }
  return dist;
}

std::vector<int> metric_interval(const std::vector<std::vector<int>>& dist, int x, int y) {
  std::vector<int> out;
  for (int w = 0; w < static_cast<int>(dist.size()); ++w)
    if (dist[x][w] + dist[w][y] == dist[x][y]) out.push_back(w);
  return out;
}

int metric_median_count(const std::vector<std::vector<int>>& dist, int x, int y, int z) {
  int count = 0;
  for (int w = 0; w < static_cast<int>(dist.size()); ++w) {
    if (dist[x][w] + dist[w][y] == dist[x][y] && dist[y][w] + dist[w][z] == dist[y][z] &&
        dist[x][w] + dist[w][z] == dist[x][z]) {
      if (++count > 1) return count;
    }
  }
  return count;
}

std::optional<int> metric_median(const std::vector<std::vector<int>>& dist, int x, int y,
                                 int z) {
  std::optional<int> found;
  for (int w = 0; w < static_cast<int>(dist.size()); ++w) {
    if (dist[x][w] + dist[w][y] == dist[x][y] && dist[y][w] + dist[w][z] == dist[y][z] &&
        dist[x][w] + dist[w][z] == dist[x][z]) {
      if (found) return std::nullopt;
      found = w;
    }
  }
  return found;
}

bool is_median_by_triples(const Graph& g) {
  auto dist = all_distances(g);
  const int n = g.vertex_count();
  for (const auto& row : dist)
    for (int d : row)
      if (d < 0) return false;  // disconnected
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (metric_median_count(dist, x, y, z) != 1) return false;
  return true;
}

std::vector<Bits> consistent_orientations(const Wallspace& w) {
  const int k = w.wall_count();
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Bits o(k);
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) o.set(i);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if (!w.walls[i][o.test(i) ? 1 : 0].intersects(w.walls[j][o.test(j) ? 1 : 0]))
          ok = false;
    if (ok) out.push_back(std::move(o));
  }
  return out;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b,
                        const std::vector<std::vector<char>>& adj_a,
                        const std::vector<std::vector<char>>& adj_b, std::vector<int>& map,
                        std::vector<char>& used, int v) {
  const int n = a.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (adj_a[v][u] != adj_b[w][map[u]]) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend_isomorphism(a, b, adj_a, adj_b, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

std::vector<std::vector<char>> dense_adj(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;
  return adj;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges.size() != b.edges.size()) return false;
  auto da = dense_adj(a), db = dense_adj(b);
  auto degs = [](const std::vector<std::vector<char>>& m) {
    std::vector<int> d;
    for (const auto& row : m)
      d.push_back(static_cast<int>(std::count(row.begin(), row.end(), 1)));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(da) != degs(db)) return false;
  std::vector<int> map(a.vertex_count(), -1);
  std::vector<char> used(a.vertex_count(), 0);
  return extend_isomorphism(a, b, da, db, map, used, 0);
}

namespace {

void automorphism_backtrack(const std::vector<std::vector<char>>& adj, std::vector<int>& map,
                            std::vector<char>& used, int v,
                            std::vector<std::vector<int>>& out, std::size_t cap) {
  const int n = static_cast<int>(adj.size());
  if (out.size() >= cap) return;
  if (v == n) {
    out.push_back(map);
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (adj[v][u] != adj[w][map[u]]) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    automorphism_backtrack(adj, map, used, v + 1, out, cap);
    used[w] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> all_automorphisms(const Graph& g, std::size_t cap) {
  auto adj = dense_adj(g);
  std::vector<int> map(g.vertex_count(), -1);
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<std::vector<int>> out;
  automorphism_backtrack(adj, map, used, 0, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> hypercube_subgraphs(const Graph& g) {
  const int n = g.vertex_count();
  auto adj = dense_adj(g);
  std::vector<std::vector<int>> out;

  // a subset induces a hypercube skeleton iff it is isomorphic to Q_d
  auto make_hypercube = [](int d) {
    Graph q;
    for (int v = 0; v < (1 << d); ++v) q.names.push_back(std::to_string(v));
    for (int v = 0; v < (1 << d); ++v)
      for (int b = 0; b < d; ++b)
        if (!((v >> b) & 1)) q.edges.push_back({v, v | (1 << b)});
    return q;
  };

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    int size = __builtin_popcountll(mask);
    int d = 0;
    while ((1 << d) < size) ++d;
    if ((1 << d) != size) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) verts.push_back(v);
    Graph induced;
    for (std::size_t i = 0; i < verts.size(); ++i) induced.names.push_back(std::to_string(i));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (adj[verts[i]][verts[j]]) induced.edges.push_back({static_cast<int>(i),
                                                              static_cast<int>(j)});
    if (graphs_isomorphic(induced, make_hypercube(d))) out.push_back(verts);
  }
  return out;
}

namespace {

long long displacement_ll(const ProductIsometry& g,
                          const std::vector<std::vector<int>>& dist, int v,
                          const std::vector<long long>& p) {
  const auto& m = g.grid_map;
  const int k = m.rank();
  long long d = dist[v][g.finite_map[v]];
  for (int i = 0; i < k; ++i) {
    long long target = m.signs()[m.perm()[i]] * p[i] +
                       m.trans()[m.perm()[i]].convert_to<long long>();
    long long cur = p[m.perm()[i]];
    d += std::llabs(target - cur);
  }
  return d;
}

template <typename Fn>
void walk_box(int rank, long long radius, Fn&& fn) {
  std::vector<long long> p(rank, -radius);
  if (rank == 0) {
    fn(p);
    return;
  }
  while (true) {
    fn(p);
    int i = rank - 1;
    while (i >= 0) {
      if (++p[i] <= radius) break;
      p[i] = -radius;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace

long long window_min_displacement(const ProductIsometry& g, long long radius) {
  auto dist = all_distances(g.complex->finite->graph());
  long long best = -1;
  for (int v = 0; v < g.complex->finite->vertex_count(); ++v)
    walk_box(g.complex->rank, radius, [&](const std::vector<long long>& p) {
      long long d = displacement_ll(g, dist, v, p);
      if (best < 0 || d < best) best = d;
    });
  return best;
}

std::vector<std::pair<int, std::vector<long long>>> window_minset(const ProductIsometry& g,
                                                                  long long radius) {
  auto dist = all_distances(g.complex->finite->graph());
  long long best = window_min_displacement(g, radius);
  std::vector<std::pair<int, std::vector<long long>>> out;
  for (int v = 0; v < g.complex->finite->vertex_count(); ++v)
    walk_box(g.complex->rank, radius, [&](const std::vector<long long>& p) {
      if (displacement_ll(g, dist, v, p) == best) out.push_back({v, p});
    });
  return out;
}

std::vector<int> closure_by_metric_medians(const Graph& g, std::vector<int> seed) {
  auto dist = all_distances(g);
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : seed) in[v] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (in[v]) cur.push_back(v);
    for (int a : cur)
      for (int b : cur)
        for (int c : cur) {
          auto m = metric_median(dist, a, b, c);
          if (m && !in[*m]) {
            in[*m] = 1;
            grew = true;
          }
        }
  }
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> convex_wall_partitions(
    const Graph& g, const std::vector<int>& members) {
  auto dist = all_distances(g);
  const int m = static_cast<int>(members.size());
  std::vector<char> is_member(g.vertex_count(), 0);
  for (int v : members) is_member[v] = 1;

  // convex within the member set: metric interval restricted to members
  auto convex = [&](std::uint64_t subset) {
    for (int i = 0; i < m; ++i) {
      if (!((subset >> i) & 1)) continue;
      for (int j = i + 1; j < m; ++j) {
        if (!((subset >> j) & 1)) continue;
        for (int w : metric_interval(dist, members[i], members[j])) {
          if (!is_member[w]) continue;
          int idx = static_cast<int>(std::find(members.begin(), members.end(), w) -
                                     members.begin());
          if (!((subset >> idx) & 1)) return false;
        }
      }
    }
    return true;
  };

  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t s = 1; s < full; s += 2) {  // member 0 stays on side 0
    if (!convex(s) || !convex(full & ~s)) continue;
    std::vector<int> a, b;
    for (int i = 0; i < m; ++i) (((s >> i) & 1) ? a : b).push_back(members[i]);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

}  // namespace oracle
