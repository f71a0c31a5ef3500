#include "cubemedian/wallspace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "cubemedian/errors.hpp"

namespace cubemedian {

int Wallspace::separation(int s, int t) const {
  int c = 0;
  for (const auto& w : walls)
    if (w[0].test(s) != w[0].test(t)) ++c;
  return c;
}

Wallspace validate_wallspace(std::vector<std::string> elements,
                             const std::vector<RawWall>& walls) {
  const int n = static_cast<int>(elements.size());
  {
    std::unordered_set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second)
        throw Error(ErrorCode::InvalidDocument, "duplicate element id '" + e + "'");
  }

  Wallspace ws;
  ws.elements = std::move(elements);
  std::unordered_set<Bits, BitsHash> canonical_seen;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    Bits a(n), b(n);
    for (int x : walls[i].side_a) {
      if (x < 0 || x >= n)
        throw Error(ErrorCode::InvalidDocument, "wall references unknown element");
      a.set(x);
    }
    for (int x : walls[i].side_b) {
      if (x < 0 || x >= n)
        throw Error(ErrorCode::InvalidDocument, "wall references unknown element");
      b.set(x);
    }
    const std::string where = "wall " + std::to_string(i);
    if (a.none() || b.none())
      throw Error(ErrorCode::EmptyHalfspace, where + " has an empty halfspace");
    if (a.intersects(b))
      throw Error(ErrorCode::NotAPartition, where + ": halfspaces overlap");
    if ((a | b).count() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::NotAPartition, where + ": halfspaces do not cover the set");
    // Unordered comparison: canonical form is the side containing element 0.
    Bits canon = a.test(0) ? a : b;
    if (!canonical_seen.insert(canon).second)
      throw Error(ErrorCode::DuplicateWall,
                  where + " repeats an earlier wall as an unordered partition");
    ws.walls.push_back({std::move(a), std::move(b)});
  }
  return ws;
}

namespace {

// An orientation is consistent iff all pairs of chosen halfspaces intersect.
// `sides` holds the chosen halfspace per wall for quick pair tests.
bool flip_keeps_consistent(const Wallspace& w, const Bits& orientation, int flip,
                           const std::vector<const Bits*>& sides) {
  const Bits& flipped = w.walls[flip][orientation.test(flip) ? 0 : 1];
  for (int j = 0; j < w.wall_count(); ++j) {
    if (j == flip) continue;
    if (!flipped.intersects(*sides[j])) return false;
  }
  return true;
}

bool orientation_consistent(const Wallspace& w, const Bits& orientation) {
  const int k = w.wall_count();
  for (int i = 0; i < k; ++i) {
    const Bits& si = w.walls[i][orientation.test(i) ? 1 : 0];
    for (int j = i + 1; j < k; ++j)
      if (!si.intersects(w.walls[j][orientation.test(j) ? 1 : 0])) return false;
  }
  return true;
}

}  // namespace

CubulationResult cubulate(const Wallspace& w, const CubulateOptions& opts) {
  const int k = w.wall_count();
  const int n = w.element_count();
  if (n == 0) throw Error(ErrorCode::InvalidDocument, "wallspace has no elements");

  auto principal_orientation = [&](int elem) {
    Bits o(k);
    for (int i = 0; i < k; ++i)
      if (w.walls[i][1].test(elem)) o.set(i);
    return o;
  };

  // BFS over single-wall flips starting from one principal orientation.
  std::unordered_map<Bits, int, BitsHash> discovered;
  std::deque<Bits> queue;
  {
    Bits start = principal_orientation(0);
    discovered.emplace(start, 0);
    queue.push_back(std::move(start));
  }
  while (!queue.empty()) {
    Bits cur = std::move(queue.front());
    queue.pop_front();
    std::vector<const Bits*> sides(k);
    for (int i = 0; i < k; ++i) sides[i] = &w.walls[i][cur.test(i) ? 1 : 0];
    for (int i = 0; i < k; ++i) {
      if (!flip_keeps_consistent(w, cur, i, sides)) continue;
      Bits next = cur;
      next.flip(i);
      if (discovered.find(next) != discovered.end()) continue;
      if (discovered.size() >= opts.max_vertices)
        throw Error(ErrorCode::TooLarge,
                    "cubulation exceeds the vertex cap (" +
                        std::to_string(opts.max_vertices) + ")");
      discovered.emplace(next, 0);
      queue.push_back(std::move(next));
    }
  }

  std::vector<Bits> orientations;
  orientations.reserve(discovered.size());
  for (const auto& [bits, _] : discovered) orientations.push_back(bits);
  std::sort(orientations.begin(), orientations.end());
  for (std::size_t i = 0; i < orientations.size(); ++i)
    discovered[orientations[i]] = static_cast<int>(i);

  // The flip graph of a finite wallspace is connected, so the BFS sees every
  // consistent orientation; recount exhaustively while 2^k is affordable.
  bool recount_checked = false;
  if (k <= 62 && (std::uint64_t{1} << k) <= opts.exhaustive_recount_limit) {
    std::uint64_t count = 0;
    Bits probe(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      for (int i = 0; i < k; ++i) probe.assign(i, (mask >> i) & 1);
      if (orientation_consistent(w, probe)) {
        ++count;
        if (discovered.find(probe) == discovered.end())
          throw Error(ErrorCode::Internal,
                      "consistency graph is disconnected: orientation missed by BFS");
      }
    }
    if (count != discovered.size())
      throw Error(ErrorCode::Internal, "orientation recount mismatch");
    recount_checked = true;
  }

  Graph g;
  const int vcount = static_cast<int>(orientations.size());
  g.names.reserve(vcount);
  for (int i = 0; i < vcount; ++i) g.names.push_back("o" + std::to_string(i));
  for (int i = 0; i < vcount; ++i) {
    const Bits& cur = orientations[i];
    std::vector<const Bits*> sides(k);
    for (int t = 0; t < k; ++t) sides[t] = &w.walls[t][cur.test(t) ? 1 : 0];
    for (int t = 0; t < k; ++t) {
      if (!flip_keeps_consistent(w, cur, t, sides)) continue;
      Bits next = cur;
      next.flip(t);
      auto it = discovered.find(next);
      if (it != discovered.end() && it->second > i) g.edges.push_back({i, it->second});
    }
  }

  CubulationResult result{MedianGraph::verify(std::move(g), opts.verify),
                          std::move(orientations),
                          {},
                          recount_checked};
  result.principal.resize(n);
  for (int e = 0; e < n; ++e) {
    auto it = discovered.find(principal_orientation(e));
    if (it == discovered.end())
      throw Error(ErrorCode::Internal, "principal orientation missing from cubulation");
    result.principal[e] = it->second;
  }
  return result;
}

}  // namespace cubemedian
