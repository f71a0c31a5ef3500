#include "cubemedian/cube_complex.hpp"

#include <algorithm>
#include <deque>

#include "cubemedian/errors.hpp"

namespace cubemedian {

namespace {

std::size_t corners_hash(const std::vector<int>& corners) {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int c : corners) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

int CubeSet::find(const std::vector<int>& sorted_corners) const {
  auto it = index_buckets.find(corners_hash(sorted_corners));
  if (it == index_buckets.end()) return -1;
  for (int id : it->second)
    if (cubes[id].corners == sorted_corners) return id;
  return -1;
}

std::vector<std::size_t> CubeSet::count_by_dim() const {
  std::vector<std::size_t> out;
  for (const auto& c : cubes) {
    if (out.size() <= static_cast<std::size_t>(c.dim())) out.resize(c.dim() + 1, 0);
    ++out[c.dim()];
  }
  return out;
}

CubeSet enumerate_cubes(const MedianGraph& g, std::size_t max_cubes) {
  const int n = g.vertex_count();
  const int k = g.theta_class_count();

  std::vector<Cube> cubes;
  std::unordered_map<std::size_t, std::vector<int>> seen;
  auto lookup = [&](const std::vector<int>& corners) {
    auto it = seen.find(corners_hash(corners));
    if (it == seen.end()) return -1;
    for (int id : it->second)
      if (cubes[id].corners == corners) return id;
    return -1;
  };
  auto insert = [&](Cube c) {
    if (cubes.size() >= max_cubes)
      throw Error(ErrorCode::TooLarge,
                  "cube count exceeds the cap of " + std::to_string(max_cubes) +
                      "; higher-dimensional skeleta are outside the representable range");
    int id = static_cast<int>(cubes.size());
    seen[corners_hash(c.corners)].push_back(id);
    cubes.push_back(std::move(c));
    return id;
  };

  std::deque<int> frontier;
  for (int v = 0; v < n; ++v) frontier.push_back(insert(Cube{{v}, {}}));

  // Expand a d-cube along a class above its current maximum: every corner
  // must have its class-t flip realized. Flip-realized labels are adjacent
  // in a median graph, so the extended corner set spans a (d+1)-cube.
  Bits flipped(k);
  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    const int tmin = cubes[id].classes.empty() ? 0 : cubes[id].classes.back() + 1;
    for (int t = tmin; t < k; ++t) {
      const auto base_corners = cubes[id].corners;  // copy: `cubes` may reallocate
      std::vector<int> ext;
      ext.reserve(base_corners.size() * 2);
      bool all = true;
      for (int x : base_corners) {
        flipped = g.label(x);
        flipped.flip(t);
        auto y = g.vertex_with_label(flipped);
        if (!y) {
          all = false;
          break;
        }
        ext.push_back(*y);
      }
      if (!all) continue;
      std::vector<int> corners = base_corners;
      corners.insert(corners.end(), ext.begin(), ext.end());
      std::sort(corners.begin(), corners.end());
      if (lookup(corners) >= 0) continue;
      Cube next{std::move(corners), cubes[id].classes};
      next.classes.push_back(t);
      frontier.push_back(insert(std::move(next)));
    }
  }

  // Canonical order: lexicographic by corner list.
  std::vector<int> order(cubes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cubes[a].corners < cubes[b].corners; });

  CubeSet out;
  out.cubes.reserve(cubes.size());
  for (int idx : order) out.cubes.push_back(std::move(cubes[idx]));
  for (std::size_t i = 0; i < out.cubes.size(); ++i)
    out.index_buckets[corners_hash(out.cubes[i].corners)].push_back(static_cast<int>(i));

  // Codim-1 faces: split the corners of each cube along each spanned class.
  for (std::size_t i = 0; i < out.cubes.size(); ++i) {
    const Cube& c = out.cubes[i];
    for (int t : c.classes) {
      std::vector<int> low, high;
      for (int x : c.corners)
        (g.side_of(t, x) ? high : low).push_back(x);
      for (auto* part : {&low, &high}) {
        int fid = out.find(*part);
        if (fid < 0) throw Error(ErrorCode::Internal, "cube facet missing from enumeration");
        out.facets.push_back({static_cast<int>(i), fid});
      }
    }
  }
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

Subdivision subdivide(const MedianGraph& g, std::size_t max_cubes,
                      const VerifyOptions& verify) {
  CubeSet cubes = enumerate_cubes(g, max_cubes);

  Graph sg;
  sg.names.reserve(cubes.cubes.size());
  for (const auto& c : cubes.cubes) {
    std::string name = g.name(c.corners[0]);
    for (std::size_t i = 1; i < c.corners.size(); ++i) name += "+" + g.name(c.corners[i]);
    sg.names.push_back(std::move(name));
  }
  for (auto [a, b] : cubes.facets) sg.edges.push_back({std::min(a, b), std::max(a, b)});
  std::sort(sg.edges.begin(), sg.edges.end());
  sg.edges.erase(std::unique(sg.edges.begin(), sg.edges.end()), sg.edges.end());

  std::vector<int> vertex_image(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertex_image[v] = cubes.find({v});
    if (vertex_image[v] < 0) throw Error(ErrorCode::Internal, "0-cube missing");
  }

  Subdivision out{std::move(cubes), MedianGraph::verify(std::move(sg), verify),
                  std::move(vertex_image)};
  return out;
}

std::vector<int> transport_automorphism(const MedianGraph& g, const Subdivision& sub,
                                        const std::vector<int>& phi) {
  check_automorphism(g.graph(), g.adjacency(), phi);
  std::vector<int> out(sub.cubes.cubes.size(), -1);
  for (std::size_t i = 0; i < sub.cubes.cubes.size(); ++i) {
    std::vector<int> image;
    image.reserve(sub.cubes.cubes[i].corners.size());
    for (int x : sub.cubes.cubes[i].corners) image.push_back(phi[x]);
    std::sort(image.begin(), image.end());
    int id = sub.cubes.find(image);
    if (id < 0) throw Error(ErrorCode::Internal, "automorphism does not permute cubes");
    out[i] = id;
  }
  return out;
}

}  // namespace cubemedian
