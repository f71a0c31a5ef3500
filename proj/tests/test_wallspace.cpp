#include <doctest.h>

#include "corpus.hpp"
#include "cubemedian/errors.hpp"
#include "cubemedian/subalgebra.hpp"
#include "cubemedian/wallspace.hpp"
#include "oracles.hpp"

using namespace cubemedian;

namespace {

Wallspace make(std::vector<std::string> elems, std::vector<RawWall> walls) {
  return validate_wallspace(std::move(elems), walls);
}

}  // namespace

TEST_CASE("validate_wallspace accepts a minimal partition") {
  Wallspace w = make({"a", "b"}, {{{0}, {1}}});
  CHECK(w.wall_count() == 1);
  CHECK(w.element_count() == 2);
}

TEST_CASE("validate_wallspace rejects overlap and non-cover") {
  CHECK_THROWS_WITH_AS(make({"a", "b"}, {{{0}, {0, 1}}}), doctest::Contains("overlap"),
                       Error);
  CHECK_THROWS_AS(make({"a", "b", "c"}, {{{0}, {1}}}), Error);
  try {
    make({"a", "b", "c"}, {{{0}, {1}}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPartition);
  }
}

TEST_CASE("validate_wallspace rejects empty halfspaces") {
  try {
    make({"a", "b"}, {{{0, 1}, {}}});
    FAIL("expected EmptyHalfspace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyHalfspace);
  }
}

TEST_CASE("duplicate walls are rejected, not deduplicated") {
  try {
    make({"a", "b", "c"}, {{{0}, {1, 2}}, {{1, 2}, {0}}});
    FAIL("expected DuplicateWall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateWall);
  }
}

TEST_CASE("cubulate: no walls gives a single vertex") {
  CubulationResult r = cubulate(make({"a", "b"}, {}));
  CHECK(r.complex.vertex_count() == 1);
  CHECK(r.complex.edge_count() == 0);
  CHECK(r.principal[0] == r.principal[1]);
}

TEST_CASE("cubulate: one wall gives a two-vertex path") {
  CubulationResult r = cubulate(make({"a", "b"}, {{{0}, {1}}}));
  CHECK(r.complex.vertex_count() == 2);
  CHECK(r.complex.edge_count() == 1);
  CHECK(r.principal[0] != r.principal[1]);
}

TEST_CASE("cubulate: three singleton walls give the star on four vertices") {
  Wallspace w = make({"a", "b", "c"}, {{{0}, {1, 2}}, {{1}, {0, 2}}, {{2}, {0, 1}}});
  // oracle: filter all 2^3 orientations by pairwise intersection
  auto orientations = oracle::consistent_orientations(w);
  CHECK(orientations.size() == 4);

  CubulationResult r = cubulate(w);
  CHECK(r.complex.vertex_count() == 4);
  CHECK(r.complex.edge_count() == 3);
  // one center of degree 3, three leaves
  std::vector<int> degree(4, 0);
  for (auto [a, b] : r.complex.graph().edges) {
    ++degree[a];
    ++degree[b];
  }
  std::sort(degree.begin(), degree.end());
  CHECK(degree == std::vector<int>{1, 1, 1, 3});
  // the all-majority orientation is the center: it must be consistent
  for (const auto& o : r.orientations) CHECK(o.size() == 3);
}

TEST_CASE("cubulate enforces the vertex cap as an error") {
  Wallspace w = make({"a", "b", "c"}, {{{0}, {1, 2}}, {{1}, {0, 2}}, {{2}, {0, 1}}});
  CubulateOptions opts;
  opts.max_vertices = 2;
  try {
    cubulate(w, opts);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("cubulation properties on random wallspaces") {
  corpus::Rng rng(0xA11CE);
  for (int iter = 0; iter < 40; ++iter) {
    Wallspace w = corpus::random_wallspace(rng);
    CubulationResult r = cubulate(w);

    // BFS enumeration equals exhaustive filtering
    auto expected = oracle::consistent_orientations(w);
    REQUIRE(expected.size() == r.orientations.size());

    // principal-orientation distance equals the separating wall count
    for (int s = 0; s < w.element_count(); ++s)
      for (int t = s + 1; t < w.element_count(); ++t)
        CHECK(r.complex.distance(r.principal[s], r.principal[t]) == w.separation(s, t));

    // every wall flips along some edge: classes are in bijection with walls
    CHECK(r.complex.theta_class_count() == w.wall_count());
  }
}

TEST_CASE("re-cubulating the convex-wall wallspace reproduces the complex") {
  corpus::Rng rng(0xB0B);
  int done = 0;
  while (done < 8) {
    CubulationResult r = corpus::random_cubulation(rng, 14);
    const MedianGraph& g = r.complex;
    if (g.vertex_count() < 2 || g.vertex_count() > 14) continue;
    ++done;

    auto parent = std::make_shared<MedianGraph>(g);
    Bits all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    Subalgebra whole = Subalgebra::verified(parent, all);
    auto walls = intrinsic_walls(whole, 16);

    std::vector<RawWall> raw;
    for (const auto& wp : walls)
      raw.push_back(RawWall{wp.side0.to_indices(), wp.side1.to_indices()});
    Wallspace rews = validate_wallspace(g.graph().names, raw);
    CubulationResult again = cubulate(rews);

    REQUIRE(again.complex.vertex_count() == g.vertex_count());
    // the principal map is a bijection onto the new complex preserving edges
    std::vector<char> hit(g.vertex_count(), 0);
    for (int v : again.principal) {
      CHECK(!hit[v]);
      hit[v] = 1;
    }
    for (auto [a, b] : g.graph().edges)
      CHECK(again.complex.distance(again.principal[a], again.principal[b]) == 1);
    CHECK(again.complex.edge_count() == g.edge_count());
  }
}
