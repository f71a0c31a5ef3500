#include "cubemedian/grid_product.hpp"

#include <algorithm>

#include "cubemedian/errors.hpp"

namespace cubemedian {

SignedAffineMap::SignedAffineMap(std::vector<int> perm, std::vector<int> signs, GridVec trans)
    : perm_(std::move(perm)), signs_(std::move(signs)), trans_(std::move(trans)) {
  const int k = rank();
  if (static_cast<int>(signs_.size()) != k || static_cast<int>(trans_.size()) != k)
    throw Error(ErrorCode::InvalidDocument, "grid map components have mismatched ranks");
  std::vector<char> hit(k, 0);
  for (int p : perm_) {
    if (p < 0 || p >= k || hit[p])
      throw Error(ErrorCode::InvalidDocument, "perm is not a permutation");
    hit[p] = 1;
  }
  for (int s : signs_)
    if (s != 1 && s != -1)
      throw Error(ErrorCode::InvalidDocument, "signs must be +1 or -1");
  cycles_ = recompute_cycles();
}

SignedAffineMap SignedAffineMap::identity(int rank) {
  std::vector<int> perm(rank), signs(rank, 1);
  for (int i = 0; i < rank; ++i) perm[i] = i;
  return SignedAffineMap(std::move(perm), std::move(signs), GridVec(rank, 0));
}

SignedAffineMap SignedAffineMap::translation(GridVec trans) {
  const int k = static_cast<int>(trans.size());
  std::vector<int> perm(k), signs(k, 1);
  for (int i = 0; i < k; ++i) perm[i] = i;
  return SignedAffineMap(std::move(perm), std::move(signs), std::move(trans));
}

GridVec SignedAffineMap::apply(const GridVec& v) const {
  const int k = rank();
  if (static_cast<int>(v.size()) != k)
    throw Error(ErrorCode::MismatchedComplex, "grid point has wrong rank");
  GridVec y(k);
  for (int i = 0; i < k; ++i) y[perm_[i]] = BigInt(signs_[perm_[i]]) * v[i] + trans_[perm_[i]];
  return y;
}

SignedAffineMap SignedAffineMap::compose(const SignedAffineMap& inner) const {
  const int k = rank();
  if (inner.rank() != k)
    throw Error(ErrorCode::MismatchedComplex, "composing grid maps of different ranks");
  std::vector<int> perm(k), signs(k);
  GridVec trans(k);
  std::vector<int> inv(k);
  for (int i = 0; i < k; ++i) inv[perm_[i]] = i;
  for (int i = 0; i < k; ++i) perm[i] = perm_[inner.perm_[i]];
  for (int j = 0; j < k; ++j) {
    signs[j] = signs_[j] * inner.signs_[inv[j]];
    trans[j] = BigInt(signs_[j]) * inner.trans_[inv[j]] + trans_[j];
  }
  return SignedAffineMap(std::move(perm), std::move(signs), std::move(trans));
}

SignedAffineMap SignedAffineMap::inverse() const {
  const int k = rank();
  std::vector<int> perm(k), signs(k);
  GridVec trans(k);
  for (int i = 0; i < k; ++i) perm[perm_[i]] = i;
  for (int i = 0; i < k; ++i) {
    signs[i] = signs_[perm_[i]];
    trans[i] = BigInt(-signs_[perm_[i]]) * trans_[perm_[i]];
  }
  return SignedAffineMap(std::move(perm), std::move(signs), std::move(trans));
}

SignedAffineMap SignedAffineMap::power(long long n) const {
  SignedAffineMap base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  SignedAffineMap acc = identity(rank());
  while (e) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

bool SignedAffineMap::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (perm_[i] != i || signs_[i] != 1 || trans_[i] != 0) return false;
  return true;
}

SignedAffineMap SignedAffineMap::doubled() const {
  GridVec t = trans_;
  for (auto& x : t) x *= 2;
  return SignedAffineMap(perm_, signs_, std::move(t));
}

BigInt SignedAffineMap::displacement(const GridVec& v) const {
  GridVec y = apply(v);
  BigInt d = 0;
  for (int i = 0; i < rank(); ++i) d += big_abs(y[i] - v[i]);
  return d;
}

std::vector<SignedAffineMap::Cycle> SignedAffineMap::recompute_cycles() const {
  const int k = rank();
  std::vector<char> seen(k, 0);
  std::vector<Cycle> out;
  for (int start = 0; start < k; ++start) {
    if (seen[start]) continue;
    Cycle cyc;
    int cur = start;
    do {
      seen[cur] = 1;
      cyc.coords.push_back(cur);
      cur = perm_[cur];
    } while (cur != start);
    const int len = static_cast<int>(cyc.coords.size());
    cyc.delta.assign(len, 1);
    for (int t = 1; t < len; ++t) cyc.delta[t] = cyc.delta[t - 1] * signs_[cyc.coords[t]];
    cyc.sign = cyc.delta[len - 1] * signs_[cyc.coords[0]];
    cyc.beta.assign(len, 0);
    cyc.beta[0] = trans_[cyc.coords[0]];  // wrap term
    for (int t = 1; t < len; ++t) cyc.beta[t] = BigInt(cyc.delta[t]) * trans_[cyc.coords[t]];
    cyc.net = 0;
    BigInt psum = 0;
    for (int t = 0; t < len; ++t) {
      cyc.net += cyc.beta[t];
      psum += trans_[cyc.coords[t]];
    }
    cyc.parity = static_cast<int>(((psum % 2) + 2) % 2);
    out.push_back(std::move(cyc));
  }
  return out;
}

BigInt SignedAffineMap::Cycle::norm_contribution() const {
  if (sign > 0) return big_abs(net);
  return BigInt(parity);
}

BigInt SignedAffineMap::translation_length() const {
  BigInt total = 0;
  for (const auto& c : cycles_) total += c.norm_contribution();
  return total;
}

GridVec SignedAffineMap::canonical_minimizer() const {
  GridVec v(rank(), 0);
  for (const auto& cyc : cycles_) {
    const int len = static_cast<int>(cyc.coords.size());
    std::vector<BigInt> w(len, 0);
    if (cyc.sign > 0) {
      // chain slack zero, wrap slack carries the net
      for (int t = 1; t < len; ++t) w[t] = w[t - 1] + cyc.beta[t];
    } else {
      BigInt psum = 0;
      for (int t = 1; t < len; ++t) psum += cyc.beta[t];
      // wrap term beta0 - w_{len-1} - w_0 equals 0 (parity 0) or 1 (parity 1)
      w[0] = (cyc.beta[0] - psum - cyc.parity) / 2;
      for (int t = 1; t < len; ++t) w[t] = w[t - 1] + cyc.beta[t];
    }
    for (int t = 0; t < len; ++t) v[cyc.coords[t]] = BigInt(cyc.delta[t]) * w[t];
  }
  return v;
}

ProductComplexPtr make_product_complex(std::shared_ptr<const MedianGraph> finite, int rank) {
  if (rank < 0) throw Error(ErrorCode::InvalidDocument, "grid rank must be >= 0");
  return std::make_shared<ProductComplex>(ProductComplex{std::move(finite), rank});
}

ProductIsometry make_isometry(ProductComplexPtr complex, std::vector<int> finite_map,
                              SignedAffineMap grid_map) {
  if (!complex) throw Error(ErrorCode::InvalidDocument, "isometry needs a complex");
  if (grid_map.rank() != complex->rank)
    throw Error(ErrorCode::MismatchedComplex, "grid map rank differs from complex rank");
  const MedianGraph& g = *complex->finite;
  check_automorphism(g.graph(), g.adjacency(), finite_map);
  return ProductIsometry{std::move(complex), std::move(finite_map), std::move(grid_map)};
}

ProductIsometry identity_isometry(ProductComplexPtr complex) {
  std::vector<int> id(complex->finite->vertex_count());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  int rank = complex->rank;
  return ProductIsometry{std::move(complex), std::move(id), SignedAffineMap::identity(rank)};
}

namespace {
void require_same_complex(const ProductIsometry& a, const ProductIsometry& b) {
  if (a.complex != b.complex)
    throw Error(ErrorCode::MismatchedComplex, "isometries act on different complexes");
}
}  // namespace

ProductIsometry compose(const ProductIsometry& a, const ProductIsometry& b) {
  require_same_complex(a, b);
  std::vector<int> fmap(a.finite_map.size());
  for (std::size_t i = 0; i < fmap.size(); ++i) fmap[i] = a.finite_map[b.finite_map[i]];
  return ProductIsometry{a.complex, std::move(fmap), a.grid_map.compose(b.grid_map)};
}

ProductIsometry inverse(const ProductIsometry& a) {
  std::vector<int> fmap(a.finite_map.size());
  for (std::size_t i = 0; i < fmap.size(); ++i) fmap[a.finite_map[i]] = static_cast<int>(i);
  return ProductIsometry{a.complex, std::move(fmap), a.grid_map.inverse()};
}

ProductIsometry power(const ProductIsometry& a, long long n) {
  ProductIsometry base = n < 0 ? inverse(a) : a;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  ProductIsometry acc = identity_isometry(a.complex);
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

bool commute(const ProductIsometry& a, const ProductIsometry& b) {
  return compose(a, b) == compose(b, a);
}

ProductVertex apply(const ProductIsometry& g, const ProductVertex& x) {
  return ProductVertex{g.finite_map[x.finite_vertex], g.grid_map.apply(x.grid)};
}

BigInt displacement(const ProductVertex& x, const ProductIsometry& g) {
  BigInt d = g.complex->finite->distance(x.finite_vertex, g.finite_map[x.finite_vertex]);
  d += g.grid_map.displacement(x.grid);
  return d;
}

BigInt product_distance(const ProductComplex& pc, const ProductVertex& x,
                        const ProductVertex& y) {
  BigInt d = pc.finite->distance(x.finite_vertex, y.finite_vertex);
  for (int i = 0; i < pc.rank; ++i) d += big_abs(x.grid[i] - y.grid[i]);
  return d;
}

ProductVertex SubdividedProduct::embed(const ProductVertex& x) const {
  ProductVertex out;
  out.finite_vertex = finite_subdivision->vertex_image[x.finite_vertex];
  out.grid.reserve(x.grid.size());
  for (const auto& c : x.grid) out.grid.push_back(c * 2);
  return out;
}

ProductIsometry SubdividedProduct::transport(const ProductIsometry& g) const {
  if (g.complex != original)
    throw Error(ErrorCode::MismatchedComplex, "isometry does not act on the subdivided complex");
  auto fmap = transport_automorphism(*original->finite, *finite_subdivision, g.finite_map);
  return ProductIsometry{complex, std::move(fmap), g.grid_map.doubled()};
}

SubdividedProduct subdivide_complex(const ProductComplexPtr& pc, std::size_t max_cubes) {
  auto sub = std::make_shared<Subdivision>(subdivide(*pc->finite, max_cubes));
  auto finite = std::shared_ptr<const MedianGraph>(sub, &sub->graph);
  SubdividedProduct out{make_product_complex(finite, pc->rank), pc, sub};
  return out;
}

std::pair<SubdividedProduct, ProductIsometry> subdivide_product(const ProductComplexPtr& pc,
                                                                const ProductIsometry& g) {
  SubdividedProduct sub = subdivide_complex(pc);
  ProductIsometry gi = sub.transport(g);
  return {std::move(sub), std::move(gi)};
}

}  // namespace cubemedian
