#include "cubemedian/fixtures.hpp"

#include <algorithm>

#include "cubemedian/errors.hpp"
#include "cubemedian/wallspace.hpp"

namespace cubemedian {

namespace {

Graph square_graph() {
  Graph g;
  g.names = {"00", "01", "10", "11"};
  g.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return g;
}

Graph star_graph(int leaves) {
  Graph g;
  g.names.push_back("c");
  for (int i = 0; i < leaves; ++i) {
    g.names.push_back("l" + std::to_string(i));
    g.edges.push_back({0, i + 1});
  }
  return g;
}

Graph cube3_graph() {
  Graph g;
  for (int v = 0; v < 8; ++v) {
    std::string name;
    for (int b = 2; b >= 0; --b) name += ((v >> b) & 1) ? '1' : '0';
    g.names.push_back(name);
  }
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!((v >> b) & 1)) g.edges.push_back({v, v | (1 << b)});
  return g;
}

Graph cycle_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.names.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& e : g.edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Graph path_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.names.push_back("p" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

Graph grid3x3_graph() {
  Graph g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g.names.push_back("g" + std::to_string(r) + std::to_string(c));
  auto id = [](int r, int c) { return 3 * r + c; };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) g.edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < 3) g.edges.push_back({id(r, c), id(r + 1, c)});
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Graph point_graph() {
  Graph g;
  g.names = {"pt"};
  return g;
}

// Square times the line, with diagonal reflections translating by the given
// amounts. The square is named 00,01,10,11; g fixes {00,11}, h fixes {01,10}.
AbelianAction diagonal_action(long long g_shift, long long h_shift) {
  auto finite = std::make_shared<MedianGraph>(MedianGraph::verify(square_graph()));
  auto complex = make_product_complex(finite, 1);
  std::vector<int> g_fin{0, 2, 1, 3};
  std::vector<int> h_fin{3, 1, 2, 0};
  ProductIsometry g =
      make_isometry(complex, g_fin, SignedAffineMap::translation({BigInt(g_shift)}));
  ProductIsometry h =
      make_isometry(complex, h_fin, SignedAffineMap::translation({BigInt(h_shift)}));
  return build_action(complex, {"g", "h"}, {g, h});
}

AbelianAction z2_translation_action() {
  auto finite = std::make_shared<MedianGraph>(MedianGraph::verify(point_graph()));
  auto complex = make_product_complex(finite, 2);
  ProductIsometry e1 =
      make_isometry(complex, {0}, SignedAffineMap::translation({BigInt(1), BigInt(0)}));
  ProductIsometry e2 =
      make_isometry(complex, {0}, SignedAffineMap::translation({BigInt(0), BigInt(1)}));
  return build_action(complex, {"e1", "e2"}, {e1, e2});
}

AbelianAction z1_translation_action() {
  auto finite = std::make_shared<MedianGraph>(MedianGraph::verify(point_graph()));
  auto complex = make_product_complex(finite, 1);
  ProductIsometry t = make_isometry(complex, {0}, SignedAffineMap::translation({BigInt(1)}));
  return build_action(complex, {"t"}, {t});
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"paper-example", "paper-example-free", "grid-z2", "grid-z1",
          "square",        "star-3",             "cube-3",  "six-cycle",
          "subdivided-square", "path-3"};
}

Fixture build_fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (name == "paper-example") {
    f.description = "square C times the line; g, h reflect the two diagonals and translate by 1";
    f.is_action = true;
    f.action = diagonal_action(1, 1);
  } else if (name == "paper-example-free") {
    f.description =
        "diagonal reflections with translations 1 and 4; free on all words with exponents <= 3";
    f.is_action = true;
    f.action = diagonal_action(1, 4);
  } else if (name == "grid-z2") {
    f.description = "Z^2 acting on the standard grid by unit translations";
    f.is_action = true;
    f.action = z2_translation_action();
  } else if (name == "grid-z1") {
    f.description = "Z acting on the line by the unit translation";
    f.is_action = true;
    f.action = z1_translation_action();
  } else if (name == "square") {
    f.description = "4-cycle, the 1-skeleton of a square";
    f.graph = square_graph();
  } else if (name == "star-3") {
    f.description = "star with three leaves";
    f.graph = star_graph(3);
  } else if (name == "cube-3") {
    f.description = "1-skeleton of the 3-cube";
    f.graph = cube3_graph();
  } else if (name == "six-cycle") {
    f.description = "6-cycle; connected and bipartite but not median";
    f.graph = cycle_graph(6);
  } else if (name == "subdivided-square") {
    f.description = "3x3 grid graph, the subdivision of the square";
    f.graph = grid3x3_graph();
  } else if (name == "path-3") {
    f.description = "path on three vertices";
    f.graph = path_graph(3);
  } else {
    throw Error(ErrorCode::InvalidDocument, "unknown fixture '" + name + "'");
  }
  return f;
}

bool minsets_intersect(const ProductIsometry& g, const ProductIsometry& h) {
  MinsetReport mg = minset(g);
  MinsetReport mh = minset(h);
  std::vector<int> common;
  std::set_intersection(mg.finite_part_min.begin(), mg.finite_part_min.end(),
                        mh.finite_part_min.begin(), mh.finite_part_min.end(),
                        std::back_inserter(common));
  if (common.empty()) return false;
  return intersection_nonempty(mg.grid_part_min, mh.grid_part_min);
}

PaperExampleReport run_paper_example_checks(const AbelianAction& a) {
  if (a.generators.size() != 2)
    throw Error(ErrorCode::InvalidDocument, "expected a two-generator action");
  const ProductIsometry& g = a.generators[0];
  const ProductIsometry& h = a.generators[1];

  PaperExampleReport rep;
  Classification cg = classify(g);
  Classification ch = classify(h);
  rep.g_kind = cg.kind;
  rep.h_kind = ch.kind;
  rep.g_norm = cg.norm;
  rep.h_norm = ch.norm;
  rep.min_g_h_disjoint = !minsets_intersect(g, h);
  rep.min_g_h2_nonempty = minsets_intersect(g, power(h, 2));
  CommonPowerResult cp = common_min_power(g, h, default_max_power(h));
  rep.common_power = cp.found ? cp.m : 0;
  rep.common_power_is_2 = cp.found && cp.m == 2;
  rep.witness = cp.witness;
  return rep;
}

}  // namespace cubemedian
