#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <vector>

#include "cubemedian/cube_complex.hpp"
#include "cubemedian/median_graph.hpp"

namespace cubemedian {

// Grid coordinates are arbitrary-precision so iterated powers cannot
// overflow.
using BigInt = boost::multiprecision::cpp_int;
using GridVec = std::vector<BigInt>;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// A cubical automorphism of the standard grid Z^k: v -> Av + b with A a
// signed permutation. perm[i] is the destination of coordinate i; signs and
// trans are indexed by destination: y[perm[i]] = signs[perm[i]]*v[i] + trans[perm[i]].
class SignedAffineMap {
public:
  SignedAffineMap() = default;
  SignedAffineMap(std::vector<int> perm, std::vector<int> signs, GridVec trans);
  static SignedAffineMap identity(int rank);
  static SignedAffineMap translation(GridVec trans);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  const GridVec& trans() const { return trans_; }

  GridVec apply(const GridVec& v) const;
  SignedAffineMap compose(const SignedAffineMap& inner) const;  // this after inner
  SignedAffineMap inverse() const;
  SignedAffineMap power(long long n) const;
  bool is_identity() const;
  bool operator==(const SignedAffineMap& o) const {
    return perm_ == o.perm_ && signs_ == o.signs_ && trans_ == o.trans_;
  }
  bool operator!=(const SignedAffineMap& o) const { return !(*this == o); }

  // trans doubled, permutation and signs unchanged: the map conjugated by
  // v -> 2v, matching the first cubical subdivision of the grid.
  SignedAffineMap doubled() const;

  BigInt displacement(const GridVec& v) const;  // |Av + b - v|_1

  // Permutation cycle with the sign/translation data used throughout the
  // isometry analysis. Coordinates are listed in destination-chain order
  // c0 -> c1 = perm(c0) -> ...; delta conjugates coordinates so the
  // per-cycle displacement terms become |w_{i-1} - w_i + beta_i|.
  struct Cycle {
    std::vector<int> coords;
    std::vector<int> delta;
    std::vector<BigInt> beta;  // beta[0] is the wrap term's constant
    int sign = 1;              // product of signs around the cycle
    BigInt net = 0;            // sum of beta; drives positive cycles
    int parity = 0;            // translation parity; drives negative cycles
    BigInt norm_contribution() const;
  };
  const std::vector<Cycle>& cycles() const { return cycles_; }
  std::vector<Cycle> recompute_cycles() const;  // cache self-consistency check

  // Exact min of displacement over the grid, summed per cycle.
  BigInt translation_length() const;
  // A canonical displacement minimizer.
  GridVec canonical_minimizer() const;

private:
  std::vector<int> perm_;
  std::vector<int> signs_;
  GridVec trans_;
  std::vector<Cycle> cycles_;
};

struct ProductComplex {
  std::shared_ptr<const MedianGraph> finite;
  int rank = 0;
};
using ProductComplexPtr = std::shared_ptr<const ProductComplex>;

ProductComplexPtr make_product_complex(std::shared_ptr<const MedianGraph> finite, int rank);

struct ProductVertex {
  int finite_vertex = 0;
  GridVec grid;
  bool operator==(const ProductVertex& o) const {
    return finite_vertex == o.finite_vertex && grid == o.grid;
  }
};

// (finite-factor automorphism, signed-permutation-affine grid map).
struct ProductIsometry {
  ProductComplexPtr complex;
  std::vector<int> finite_map;
  SignedAffineMap grid_map;

  bool operator==(const ProductIsometry& o) const {
    return finite_map == o.finite_map && grid_map == o.grid_map;
  }
};

// Validates the finite part as a graph automorphism and the rank match.
ProductIsometry make_isometry(ProductComplexPtr complex, std::vector<int> finite_map,
                              SignedAffineMap grid_map);
ProductIsometry identity_isometry(ProductComplexPtr complex);

ProductIsometry compose(const ProductIsometry& a, const ProductIsometry& b);  // a after b
ProductIsometry inverse(const ProductIsometry& a);
ProductIsometry power(const ProductIsometry& a, long long n);
bool commute(const ProductIsometry& a, const ProductIsometry& b);

ProductVertex apply(const ProductIsometry& g, const ProductVertex& x);
BigInt displacement(const ProductVertex& x, const ProductIsometry& g);
BigInt product_distance(const ProductComplex& pc, const ProductVertex& x,
                        const ProductVertex& y);

// First cubical subdivision of the product: the finite factor is subdivided,
// the grid doubled. embed() is the distance-doubling vertex embedding and
// transport() carries isometries over.
struct SubdividedProduct {
  ProductComplexPtr complex;
  ProductComplexPtr original;
  std::shared_ptr<const Subdivision> finite_subdivision;

  ProductVertex embed(const ProductVertex& x) const;
  ProductIsometry transport(const ProductIsometry& g) const;
};
SubdividedProduct subdivide_complex(const ProductComplexPtr& pc,
                                    std::size_t max_cubes = std::size_t{1} << 20);
// Single-isometry form.
std::pair<SubdividedProduct, ProductIsometry> subdivide_product(const ProductComplexPtr& pc,
                                                                const ProductIsometry& g);

}  // namespace cubemedian
