#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubemedian/grid_constraints.hpp"
#include "cubemedian/grid_product.hpp"

namespace cubemedian {

enum class IsometryKind { Elliptic, Inverting, Loxodromic };
const char* isometry_kind_name(IsometryKind k);

// Stabilized cube of the product complex: a cube of the finite factor times
// a box of unit or degenerate intervals in the grid.
struct CubeWitness {
  std::vector<int> finite_corners;
  std::vector<std::array<BigInt, 2>> grid_intervals;  // [lo, hi], hi - lo in {0, 1}
};

// Hyperplane whose halfspaces are swapped by the stated power of g.
struct HyperplaneWitness {
  bool finite = false;
  int finite_class = -1;
  int grid_coordinate = -1;
  BigInt grid_threshold = 0;  // wall between threshold and threshold + 1
  int power = 1;
};

// Geodesic fundamental domain from base to g(base); the g-orbit of the
// steps is a combinatorial axis.
struct AxisPath {
  ProductVertex base;
  std::vector<ProductVertex> steps;  // inclusive of both endpoints
};

struct Classification {
  IsometryKind kind = IsometryKind::Elliptic;
  BigInt norm = 0;
  std::optional<CubeWitness> stabilized_cube;
  std::optional<HyperplaneWitness> swapped_hyperplane;
  std::optional<AxisPath> axis;
};

struct MinsetReport {
  BigInt norm = 0;
  std::vector<int> finite_part_min;  // sorted finite-factor argmin vertices
  GridConstraintSet grid_part_min;
};

// ||g|| = min displacement over 0-cubes: finite-factor minimum plus the
// per-cycle grid contributions.
BigInt translation_length(const ProductIsometry& g);

std::vector<int> finite_argmin(const ProductIsometry& g);
bool bounded_orbits(const ProductIsometry& g);
// Orbit-stable loxodromy test: unbounded orbits, a fixed vertex in the
// finite factor, and exactly multiplicative grid contributions.
bool is_loxodromic(const ProductIsometry& g);

MinsetReport minset(const ProductIsometry& g);
Classification classify(const ProductIsometry& g);

AxisPath axis_of(const ProductIsometry& g);  // throws NotLoxodromic
// Axis through a chosen minset point (throws if x is not in Min g).
AxisPath axis_through(const ProductIsometry& g, const ProductVertex& x);

struct CommonPowerResult {
  bool found = false;
  int m = 0;
  int max_m = 0;
  std::optional<ProductVertex> witness;
};
// Smallest m in 1..max_m with Min g and Min h^m intersecting; the witness is
// the lexicographically least intersection point inside the search window.
CommonPowerResult common_min_power(const ProductIsometry& g, const ProductIsometry& h,
                                   int max_m);
// 2 * lcm(order of the finite part, grid stabilization exponent), capped.
int default_max_power(const ProductIsometry& h, int cap = 1024);

// Window radius 2*(||g|| + rank + finite diameter) used by the brute-force
// verification paths and witness tie-breaking.
long long default_window_radius(const ProductIsometry& g);

// Lexicographically least Min g point within the window (enlarged when the
// canonical minimizer lies outside).
ProductVertex min_witness(const ProductIsometry& g,
                          std::optional<long long> window = std::nullopt);

// All minset points in the box of the given radius, lexicographic order.
std::vector<ProductVertex> minset_window_points(const ProductIsometry& g, long long radius);

// Brute-force window minimum of the displacement (test/verification oracle
// surface for the CLI's --window flag).
BigInt window_min_displacement(const ProductIsometry& g, long long radius);

// A vertex of the subdivided product names a cube of the original complex.
CubeWitness decode_subdivision_cube(const SubdividedProduct& sub, const ProductVertex& x);

}  // namespace cubemedian
