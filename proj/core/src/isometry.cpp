#include "cubemedian/isometry.hpp"

#include <algorithm>
#include <numeric>

#include "cubemedian/errors.hpp"

namespace cubemedian {

const char* isometry_kind_name(IsometryKind k) {
  switch (k) {
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Inverting: return "inverting";
    case IsometryKind::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

BigInt translation_length(const ProductIsometry& g) {
  const MedianGraph& f = *g.complex->finite;
  int best = -1;
  for (int v = 0; v < f.vertex_count(); ++v) {
    int d = f.distance(v, g.finite_map[v]);
    if (best < 0 || d < best) best = d;
  }
  return BigInt(best) + g.grid_map.translation_length();
}

std::vector<int> finite_argmin(const ProductIsometry& g) {
  const MedianGraph& f = *g.complex->finite;
  int best = -1;
  std::vector<int> out;
  for (int v = 0; v < f.vertex_count(); ++v) {
    int d = f.distance(v, g.finite_map[v]);
    if (best < 0 || d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(v);
  }
  return out;
}

bool bounded_orbits(const ProductIsometry& g) {
  for (const auto& cyc : g.grid_map.cycles())
    if (cyc.sign > 0 && cyc.net != 0) return false;
  return true;
}

namespace {

// Positive cycles scale exactly; a negative cycle must contribute nothing at
// every power (its contribution is periodic with period 2*len).
bool grid_multiplicative(const SignedAffineMap& m) {
  int max_check = 1;
  for (const auto& cyc : m.cycles())
    if (cyc.sign < 0) max_check = std::max(max_check, 2 * static_cast<int>(cyc.coords.size()));
  if (max_check == 1) return true;
  const BigInt unit = m.translation_length();
  for (int j = 2; j <= max_check; ++j)
    if (m.power(j).translation_length() != BigInt(j) * unit) return false;
  return true;
}

bool finite_has_fixed_vertex(const ProductIsometry& g) {
  for (std::size_t v = 0; v < g.finite_map.size(); ++v)
    if (g.finite_map[v] == static_cast<int>(v)) return true;
  return false;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// Grid stabilization exponent: smallest e with the linear part of m^e
// trivial on every cycle (len for positive, 2*len for negative cycles).
long long grid_stabilization(const SignedAffineMap& m) {
  long long e = 1;
  for (const auto& cyc : m.cycles()) {
    long long len = static_cast<long long>(cyc.coords.size());
    e = lcm_ll(e, cyc.sign > 0 ? len : 2 * len);
  }
  return e;
}

}  // namespace

bool is_loxodromic(const ProductIsometry& g) {
  return !bounded_orbits(g) && finite_has_fixed_vertex(g) &&
         grid_multiplicative(g.grid_map);
}

MinsetReport minset(const ProductIsometry& g) {
  MinsetReport r;
  r.norm = translation_length(g);
  r.finite_part_min = finite_argmin(g);
  r.grid_part_min = grid_argmin(g.grid_map);
  return r;
}

long long default_window_radius(const ProductIsometry& g) {
  BigInt norm = translation_length(g);
  BigInt r = 2 * (norm + g.complex->rank + g.complex->finite->diameter());
  // Sign-mixed cycles can pin their minimizers far from the origin (a swap
  // with translations (t, -t) fixes exactly (0, -t)); the window must reach
  // the canonical minimizer or the brute-force minimum overshoots the norm.
  for (const auto& c : g.grid_map.canonical_minimizer()) {
    BigInt a = big_abs(c);
    if (a > r) r = a;
  }
  if (r > 1'000'000) throw Error(ErrorCode::TooLarge, "verification window too large");
  long long out = r.convert_to<long long>();
  return std::max<long long>(out, 1);
}

namespace {

// Lexicographic walk over the box [-radius, radius]^k.
template <typename Fn>
void for_each_box_point(int rank, long long radius, Fn&& fn) {
  GridVec v(rank, BigInt(-radius));
  if (rank == 0) {
    fn(v);
    return;
  }
  while (true) {
    if (!fn(v)) return;
    int i = rank - 1;
    while (i >= 0) {
      v[i] += 1;
      if (v[i] <= radius) break;
      v[i] = -radius;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace

std::vector<ProductVertex> minset_window_points(const ProductIsometry& g, long long radius) {
  const BigInt norm = translation_length(g);
  std::vector<ProductVertex> out;
  const int n = g.complex->finite->vertex_count();
  for (int v = 0; v < n; ++v) {
    for_each_box_point(g.complex->rank, radius, [&](const GridVec& p) {
      ProductVertex x{v, p};
      if (displacement(x, g) == norm) out.push_back(x);
      return true;
    });
  }
  // lexicographic by (finite vertex, grid point); finite loop is outermost
  // and the box walk is lexicographic already
  return out;
}

BigInt window_min_displacement(const ProductIsometry& g, long long radius) {
  std::optional<BigInt> best;
  const int n = g.complex->finite->vertex_count();
  for (int v = 0; v < n; ++v) {
    for_each_box_point(g.complex->rank, radius, [&](const GridVec& p) {
      BigInt d = displacement(ProductVertex{v, p}, g);
      if (!best || d < *best) best = d;
      return true;
    });
  }
  if (!best) throw Error(ErrorCode::Internal, "empty window");
  return *best;
}

ProductVertex min_witness(const ProductIsometry& g, std::optional<long long> window) {
  long long radius = window ? *window : default_window_radius(g);
  // The canonical minimizer bounds how far the window must reach.
  GridVec canon = g.grid_map.canonical_minimizer();
  for (const auto& c : canon) {
    BigInt a = big_abs(c);
    if (a > radius) radius = a.convert_to<long long>();
  }
  const BigInt norm = translation_length(g);
  auto fmin = finite_argmin(g);
  const BigInt grid_norm = g.grid_map.translation_length();
  for (int v : fmin) {
    std::optional<ProductVertex> hit;
    for_each_box_point(g.complex->rank, radius, [&](const GridVec& p) {
      if (g.grid_map.displacement(p) == grid_norm) {
        hit = ProductVertex{v, p};
        return false;
      }
      return true;
    });
    if (hit) {
      if (displacement(*hit, g) != norm)
        throw Error(ErrorCode::Internal, "minset witness displacement mismatch");
      return *hit;
    }
  }
  throw Error(ErrorCode::Internal, "no minset point inside the search window");
}

namespace {

AxisPath build_axis(const ProductIsometry& g, const ProductVertex& x) {
  const BigInt norm = translation_length(g);
  AxisPath axis;
  axis.base = x;
  axis.steps.push_back(x);
  // Loxodromic isometries of a product pin the finite coordinate on their
  // minset, so a fundamental domain is a staircase of grid unit steps.
  ProductVertex cur = x;
  GridVec target = g.grid_map.apply(x.grid);
  for (int i = 0; i < g.complex->rank; ++i) {
    while (cur.grid[i] != target[i]) {
      cur.grid[i] += (target[i] > cur.grid[i]) ? 1 : -1;
      axis.steps.push_back(cur);
    }
  }
  if (g.finite_map[x.finite_vertex] != x.finite_vertex)
    throw Error(ErrorCode::Internal, "axis base is not fixed by the finite part");
  if (BigInt(static_cast<long long>(axis.steps.size()) - 1) != norm)
    throw Error(ErrorCode::Internal, "axis fundamental domain length != norm");

  // Safety: over three periods no grid wall may be crossed twice.
  std::vector<std::pair<int, BigInt>> crossed;
  ProductVertex base = x;
  for (int period = 0; period < 3; ++period) {
    ProductVertex prev = axis.steps.front();
    for (std::size_t s = 1; s < axis.steps.size(); ++s) {
      ProductVertex cs = axis.steps[s];
      for (int i = 0; i < g.complex->rank; ++i) {
        if (cs.grid[i] != prev.grid[i]) {
          BigInt lo = std::min(cs.grid[i], prev.grid[i]);
          auto wall = std::make_pair(i, lo);
          if (std::find(crossed.begin(), crossed.end(), wall) != crossed.end())
            throw Error(ErrorCode::Internal, "axis crosses a grid wall twice");
          crossed.push_back(wall);
        }
      }
      prev = cs;
    }
    // translate the domain by g for the next period
    for (auto& st : axis.steps) st = apply(g, st);
  }
  // restore the stored fundamental domain
  axis.steps.clear();
  axis.steps.push_back(x);
  cur = x;
  for (int i = 0; i < g.complex->rank; ++i) {
    while (cur.grid[i] != target[i]) {
      cur.grid[i] += (target[i] > cur.grid[i]) ? 1 : -1;
      axis.steps.push_back(cur);
    }
  }
  return axis;
}

}  // namespace

AxisPath axis_of(const ProductIsometry& g) {
  if (!is_loxodromic(g))
    throw Error(ErrorCode::NotLoxodromic, "axis requested for a non-loxodromic isometry");
  return build_axis(g, min_witness(g));
}

AxisPath axis_through(const ProductIsometry& g, const ProductVertex& x) {
  if (!is_loxodromic(g))
    throw Error(ErrorCode::NotLoxodromic, "axis requested for a non-loxodromic isometry");
  if (displacement(x, g) != translation_length(g))
    throw Error(ErrorCode::InvalidDocument, "seed vertex is not in the minset");
  return build_axis(g, x);
}

namespace {

std::optional<HyperplaneWitness> find_swapped_hyperplane(const ProductIsometry& g) {
  const MedianGraph& f = *g.complex->finite;
  std::optional<HyperplaneWitness> best;
  auto consider = [&](HyperplaneWitness w) {
    if (!best || w.power < best->power ||
        (w.power == best->power && w.finite && !best->finite))
      best = std::move(w);
  };

  // finite-factor classes swapped by powers of the finite part
  {
    int order = MedianGraph::automorphism_order(g.finite_map);
    std::vector<int> cur = g.finite_map;
    for (int j = 1; j <= order; ++j) {
      for (int c = 0; c < f.theta_class_count(); ++c) {
        auto [img, swapped] = f.class_image(cur, c);
        if (img == c && swapped) {
          consider(HyperplaneWitness{true, c, -1, 0, j});
          break;
        }
      }
      if (best) break;  // smallest finite power found
      std::vector<int> next(cur.size());
      for (std::size_t v = 0; v < cur.size(); ++v) next[v] = g.finite_map[cur[v]];
      cur = std::move(next);
    }
  }

  // grid walls swapped by powers: a coordinate fixed by the permutation with
  // sign -1 and odd translation
  {
    long long stab = grid_stabilization(g.grid_map);
    long long limit = 2 * stab * stab + 2;
    if (best) limit = std::min<long long>(limit, best->power - 1);
    SignedAffineMap cur = g.grid_map;
    for (long long j = 1; j <= limit; ++j) {
      for (int i = 0; i < cur.rank(); ++i) {
        if (cur.perm()[i] == i && cur.signs()[i] == -1 &&
            ((cur.trans()[i] % 2) + 2) % 2 == 1) {
          // v -> -v + b swaps the wall between (b-1)/2 and (b+1)/2
          consider(HyperplaneWitness{false, -1, i, (cur.trans()[i] - 1) / 2,
                                     static_cast<int>(j)});
          break;
        }
      }
      if (best && best->power <= j) break;
      cur = cur.compose(g.grid_map);
    }
  }
  return best;
}

}  // namespace

CubeWitness decode_subdivision_cube(const SubdividedProduct& sub, const ProductVertex& x) {
  CubeWitness w;
  w.finite_corners = sub.finite_subdivision->cubes.cubes[x.finite_vertex].corners;
  for (const auto& c : x.grid) {
    if (c % 2 == 0)
      w.grid_intervals.push_back({c / 2, c / 2});
    else {
      BigInt lo = (c - 1) / 2;
      w.grid_intervals.push_back({lo, lo + 1});
    }
  }
  return w;
}

Classification classify(const ProductIsometry& g) {
  Classification out;
  out.norm = translation_length(g);

  if (bounded_orbits(g)) {
    out.kind = IsometryKind::Elliptic;
    // Fixed vertex of the subdivided complex = stabilized cube.
    auto [sub, gi] = subdivide_product(g.complex, g);
    if (translation_length(gi) != 0)
      throw Error(ErrorCode::Internal, "bounded isometry has no fixed subdivision vertex");
    ProductVertex fixed = min_witness(gi);
    out.stabilized_cube = decode_subdivision_cube(sub, fixed);
    return out;
  }

  if (is_loxodromic(g)) {
    out.kind = IsometryKind::Loxodromic;
    out.axis = axis_of(g);
    return out;
  }

  out.kind = IsometryKind::Inverting;
  out.swapped_hyperplane = find_swapped_hyperplane(g);
  if (!out.swapped_hyperplane)
    throw Error(ErrorCode::Internal,
                "unbounded non-loxodromic isometry with no swapped hyperplane");
  return out;
}

int default_max_power(const ProductIsometry& h, int cap) {
  long long order = MedianGraph::automorphism_order(h.finite_map);
  long long bound = 2 * lcm_ll(order, grid_stabilization(h.grid_map));
  return static_cast<int>(std::min<long long>(bound, cap));
}

CommonPowerResult common_min_power(const ProductIsometry& g, const ProductIsometry& h,
                                   int max_m) {
  if (g.complex != h.complex)
    throw Error(ErrorCode::MismatchedComplex, "isometries act on different complexes");
  if (!commute(g, h))
    throw Error(ErrorCode::NotCommuting, "isometries do not commute");
  if (!is_loxodromic(g) || !is_loxodromic(h))
    throw Error(ErrorCode::NotLoxodromic, "common_min_power needs loxodromic inputs");

  CommonPowerResult res;
  res.max_m = max_m;
  MinsetReport mg = minset(g);
  for (int m = 1; m <= max_m; ++m) {
    ProductIsometry hm = power(h, m);
    MinsetReport mh = minset(hm);
    std::vector<int> common;
    std::set_intersection(mg.finite_part_min.begin(), mg.finite_part_min.end(),
                          mh.finite_part_min.begin(), mh.finite_part_min.end(),
                          std::back_inserter(common));
    if (common.empty()) continue;
    auto model = intersection_model(mg.grid_part_min, mh.grid_part_min);
    if (!model) continue;

    res.found = true;
    res.m = m;
    // Lexicographically least witness within the (possibly enlarged) window.
    long long radius = std::max(default_window_radius(g), default_window_radius(hm));
    for (const auto& c : *model) {
      BigInt a = big_abs(c);
      if (a > radius) radius = a.convert_to<long long>();
    }
    const BigInt ng = mg.norm, nh = mh.norm;
    for (int v : common) {
      std::optional<ProductVertex> hit;
      for_each_box_point(g.complex->rank, radius, [&](const GridVec& p) {
        ProductVertex x{v, p};
        if (displacement(x, g) == ng && displacement(x, hm) == nh) {
          hit = x;
          return false;
        }
        return true;
      });
      if (hit) {
        res.witness = *hit;
        break;
      }
    }
    if (!res.witness) {
      // fall back to the symbolic model on the least common finite vertex
      res.witness = ProductVertex{common.front(), *model};
    }
    return res;
  }
  return res;
}

}  // namespace cubemedian
