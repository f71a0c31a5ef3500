#include <doctest.h>

#include "corpus.hpp"
#include "cubemedian/cube_complex.hpp"
#include "cubemedian/errors.hpp"
#include "cubemedian/fixtures.hpp"
#include "oracles.hpp"

using namespace cubemedian;

namespace {

MedianGraph fixture_median(const char* name) {
  return MedianGraph::verify(build_fixture(name).graph);
}

}  // namespace

TEST_CASE("cube counts: edge, square, 3-cube") {
  {
    Graph e;
    e.names = {"a", "b"};
    e.edges = {{0, 1}};
    CubeSet cs = enumerate_cubes(MedianGraph::verify(e));
    CHECK(cs.count_by_dim() == std::vector<std::size_t>{2, 1});
  }
  {
    CubeSet cs = enumerate_cubes(fixture_median("square"));
    CHECK(cs.count_by_dim() == std::vector<std::size_t>{4, 4, 1});
  }
  {
    MedianGraph c3 = fixture_median("cube-3");
    CubeSet cs = enumerate_cubes(c3);
    CHECK(cs.count_by_dim() == std::vector<std::size_t>{8, 12, 6, 1});
    // oracle: exhaustive hypercube-subgraph search over all vertex subsets
    auto expected = oracle::hypercube_subgraphs(c3.graph());
    REQUIRE(expected.size() == cs.cubes.size());
    for (const auto& corners : expected) CHECK(cs.find(corners) >= 0);
  }
}

TEST_CASE("cube enumeration matches the exhaustive search on random cubulations") {
  corpus::Rng rng(0xC0BE);
  int done = 0;
  while (done < 8) {
    auto g = corpus::random_median_graph(rng, 12);
    if (g->vertex_count() > 12) continue;
    ++done;
    CubeSet cs = enumerate_cubes(*g);
    auto expected = oracle::hypercube_subgraphs(g->graph());
    REQUIRE(cs.cubes.size() == expected.size());
    for (const auto& corners : expected) CHECK(cs.find(corners) >= 0);
  }
}

TEST_CASE("enumerate_cubes enforces its cap") {
  try {
    enumerate_cubes(fixture_median("cube-3"), 5);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("subdivision of a single vertex is a single vertex") {
  Graph p;
  p.names = {"v"};
  Subdivision sub = subdivide(MedianGraph::verify(p));
  CHECK(sub.graph.vertex_count() == 1);
}

TEST_CASE("subdivision of an edge is the path on three vertices") {
  Graph e;
  e.names = {"a", "b"};
  e.edges = {{0, 1}};
  Subdivision sub = subdivide(MedianGraph::verify(e));
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edge_count() == 2);
  CHECK(oracle::graphs_isomorphic(sub.graph.graph(), build_fixture("path-3").graph));
}

TEST_CASE("subdivision of the square is the 3x3 grid") {
  Subdivision sub = subdivide(fixture_median("square"));
  CHECK(sub.graph.vertex_count() == 9);
  CHECK(oracle::graphs_isomorphic(sub.graph.graph(), build_fixture("subdivided-square").graph));
}

TEST_CASE("subdivision doubles distances and theta classes") {
  corpus::Rng rng(0x5D17);
  for (const char* name : {"square", "star-3", "path-3", "cube-3"}) {
    MedianGraph g = fixture_median(name);
    Subdivision sub = subdivide(g);
    CHECK(sub.graph.theta_class_count() == 2 * g.theta_class_count());
    for (int x = 0; x < g.vertex_count(); ++x)
      for (int y = 0; y < g.vertex_count(); ++y)
        CHECK(sub.graph.distance(sub.vertex_image[x], sub.vertex_image[y]) ==
              2 * g.distance(x, y));
  }
  for (int iter = 0; iter < 4; ++iter) {
    auto g = corpus::random_median_graph(rng, 24);
    Subdivision sub = subdivide(*g);
    CHECK(sub.graph.theta_class_count() == 2 * g->theta_class_count());
    for (int x = 0; x < g->vertex_count(); ++x)
      for (int y = 0; y < g->vertex_count(); ++y)
        CHECK(sub.graph.distance(sub.vertex_image[x], sub.vertex_image[y]) ==
              2 * g->distance(x, y));
  }
}

TEST_CASE("transport_automorphism: identity, rotation, edge swap") {
  {
    MedianGraph g = fixture_median("square");
    Subdivision sub = subdivide(g);
    std::vector<int> id{0, 1, 2, 3};
    auto tid = transport_automorphism(g, sub, id);
    for (std::size_t i = 0; i < tid.size(); ++i) CHECK(tid[i] == static_cast<int>(i));

    // rotation by one corner: 00 -> 01 -> 11 -> 10 -> 00
    std::vector<int> rot{1, 3, 0, 2};
    auto trot = transport_automorphism(g, sub, rot);
    check_automorphism(sub.graph.graph(), sub.graph.adjacency(), trot);
    // the 2-cube (whole square) is the unique fixed subdivision vertex
    int fixed = -1;
    for (std::size_t i = 0; i < trot.size(); ++i)
      if (trot[i] == static_cast<int>(i)) {
        CHECK(fixed == -1);
        fixed = static_cast<int>(i);
      }
    REQUIRE(fixed >= 0);
    CHECK(sub.cubes.cubes[fixed].dim() == 2);

    // functorial: transport(rot)^2 == transport(rot^2)
    std::vector<int> rot2(4);
    for (int v = 0; v < 4; ++v) rot2[v] = rot[rot[v]];
    auto trot2 = transport_automorphism(g, sub, rot2);
    for (int v = 0; v < sub.graph.vertex_count(); ++v) CHECK(trot[trot[v]] == trot2[v]);
  }
  {
    Graph e;
    e.names = {"a", "b"};
    e.edges = {{0, 1}};
    MedianGraph g = MedianGraph::verify(e);
    Subdivision sub = subdivide(g);
    auto swapped = transport_automorphism(g, sub, {1, 0});
    // the midpoint (the 1-cube) is fixed
    int mid = sub.cubes.find({0, 1});
    REQUIRE(mid >= 0);
    CHECK(swapped[mid] == mid);
  }
}

TEST_CASE("transport rejects non-automorphisms") {
  MedianGraph g = fixture_median("star-3");
  Subdivision sub = subdivide(g);
  try {
    transport_automorphism(g, sub, {1, 0, 2, 3});  // moves the center onto a leaf
    FAIL("expected NotAutomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAutomorphism);
  }
}

TEST_CASE("no transported automorphism swaps a theta class of the subdivision") {
  for (const char* name : {"square", "star-3", "path-3", "cube-3"}) {
    MedianGraph g = fixture_median(name);
    Subdivision sub = subdivide(g);
    for (const auto& phi : oracle::all_automorphisms(g.graph())) {
      auto t = transport_automorphism(g, sub, phi);
      for (int c = 0; c < sub.graph.theta_class_count(); ++c) {
        auto [img, swapped] = sub.graph.class_image(t, c);
        if (img == c) CHECK_FALSE(swapped);
      }
    }
  }
}
