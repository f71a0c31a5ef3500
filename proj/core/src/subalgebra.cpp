#include "cubemedian/subalgebra.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cubemedian/errors.hpp"

namespace cubemedian {

Subalgebra::Subalgebra(std::shared_ptr<const MedianGraph> parent, Bits members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  member_list_ = members_.to_indices();
}

Subalgebra Subalgebra::closure(std::shared_ptr<const MedianGraph> parent,
                               const std::vector<int>& seed) {
  if (seed.empty())
    throw Error(ErrorCode::InvalidDocument, "subalgebra seed is empty");
  const int n = parent->vertex_count();
  Bits members(n);
  std::vector<int> work;
  for (int v : seed) {
    if (v < 0 || v >= n)
      throw Error(ErrorCode::InvalidDocument, "seed vertex out of range");
    if (!members.test(v)) {
      members.set(v);
      work.push_back(v);
    }
  }
  // Fixed-point iteration; each round only needs triples touching new points.
  std::vector<int> fresh = work;
  while (!fresh.empty()) {
    std::vector<int> next;
    std::vector<int> all = members.to_indices();
    for (int a : fresh)
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j) {
          int mu = parent->median(a, all[i], all[j]);
          if (!members.test(mu)) {
            members.set(mu);
            next.push_back(mu);
          }
        }
    fresh = std::move(next);
  }
  return Subalgebra(std::move(parent), std::move(members));
}

Subalgebra Subalgebra::verified(std::shared_ptr<const MedianGraph> parent, Bits members) {
  if (members.none())
    throw Error(ErrorCode::InvalidDocument, "subalgebra member set is empty");
  auto list = members.to_indices();
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i; j < list.size(); ++j)
      for (std::size_t l = j; l < list.size(); ++l) {
        int mu = parent->median(list[i], list[j], list[l]);
        if (!members.test(mu))
          throw Error(ErrorCode::NotSubalgebra,
                      "member set is not mu-closed: mu(" + parent->name(list[i]) + "," +
                          parent->name(list[j]) + "," + parent->name(list[l]) + ") = " +
                          parent->name(mu));
      }
  return Subalgebra(std::move(parent), std::move(members));
}

Bits Subalgebra::interval_in(int x, int y) const {
  Bits iv = parent_->interval_bits(x, y);
  iv &= members_;
  return iv;
}

bool Subalgebra::is_convex_in(const Bits& subset) const {
  const int n = parent_->vertex_count();
  for (int x = static_cast<int>(subset.find_first()); x < n;
       x = static_cast<int>(subset.find_next(x + 1)))
    for (int y = static_cast<int>(subset.find_next(x + 1)); y < n;
         y = static_cast<int>(subset.find_next(y + 1)))
      if (!interval_in(x, y).is_subset_of(subset)) return false;
  return true;
}

std::vector<WallPartition> intrinsic_walls(const Subalgebra& y, int member_cap) {
  const auto& mem = y.member_list();
  const int m = static_cast<int>(mem.size());
  if (m > member_cap)
    throw Error(ErrorCode::TooLarge,
                "intrinsic wall enumeration needs 2^" + std::to_string(m) +
                    " subsets, above the cap of 2^" + std::to_string(member_cap));
  std::vector<WallPartition> out;
  if (m < 2) return out;

  if (m > 62) throw Error(ErrorCode::TooLarge, "member count exceeds mask width");
  // Local pair intervals as masks over member indices.
  std::vector<std::vector<std::uint64_t>> imask(m, std::vector<std::uint64_t>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Bits iv = y.interval_in(mem[i], mem[j]);
      std::uint64_t mask = 0;
      for (int t = 0; t < m; ++t)
        if (iv.test(mem[t])) mask |= (std::uint64_t{1} << t);
      imask[i][j] = imask[j][i] = mask;
    }
  auto convex = [&](std::uint64_t s) {
    for (int i = 0; i < m; ++i) {
      if (!((s >> i) & 1)) continue;
      for (int j = i + 1; j < m; ++j) {
        if (!((s >> j) & 1)) continue;
        if (imask[i][j] & ~s) return false;
      }
    }
    return true;
  };

  const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  // Canonical side contains member index 0; enumerate those subsets only.
  for (std::uint64_t s = 1; s < full; s += 2) {
    if (!convex(s) || !convex(full & ~s)) continue;
    const int n = y.parent().vertex_count();
    WallPartition w{Bits(n), Bits(n)};
    for (int t = 0; t < m; ++t)
      ((s >> t) & 1 ? w.side0 : w.side1).set(mem[t]);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WallPartition> induced_walls(const Subalgebra& y) {
  const MedianGraph& g = y.parent();
  const int n = g.vertex_count();
  const int smallest = y.member_list().front();
  std::vector<WallPartition> out;
  std::unordered_set<Bits, BitsHash> seen;
  for (int c = 0; c < g.theta_class_count(); ++c) {
    Bits a = g.halfspace(c, 0) & y.members();
    Bits b = g.halfspace(c, 1) & y.members();
    if (a.none() || b.none()) continue;
    WallPartition w = a.test(smallest) ? WallPartition{std::move(a), std::move(b)}
                                       : WallPartition{std::move(b), std::move(a)};
    if (seen.insert(w.side0).second) out.push_back(std::move(w));
  }
  (void)n;
  std::sort(out.begin(), out.end());
  return out;
}

AgreeVerdict check_lemma_agree(const Subalgebra& y, int member_cap) {
  auto ind = induced_walls(y);
  auto intr = intrinsic_walls(y, member_cap);
  AgreeVerdict v;
  std::size_t i = 0, j = 0;
  while (i < ind.size() || j < intr.size()) {
    if (j == intr.size() || (i < ind.size() && ind[i] < intr[j])) {
      v.ok = false;
      v.witness = ind[i];
      v.witness_origin = "induced-only";
      return v;
    }
    if (i == ind.size() || intr[j] < ind[i]) {
      v.ok = false;
      v.witness = intr[j];
      v.witness_origin = "intrinsic-only";
      return v;
    }
    ++i, ++j;
  }
  return v;
}

namespace {

int index_of(const std::vector<int>& sorted, int value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

ProductVerdict check_lemma_product(const ProductDecomposition& pd, std::size_t triple_budget) {
  ProductVerdict v;
  const MedianGraph& g = *pd.parent;
  const auto& T = pd.factor_t;
  const auto& F = pd.factor_f;
  auto invalid = [&](const std::string& why) {
    v.valid = false;
    v.invalid_reason = why;
    return v;
  };

  {
    const int n = g.vertex_count();
    auto in_range = [n](int x) { return x >= 0 && x < n; };
    if (!in_range(pd.basepoint)) return invalid("basepoint out of range");
    for (int t : T)
      if (!in_range(t)) return invalid("factor_T vertex out of range");
    for (int f : F)
      if (!in_range(f)) return invalid("factor_F vertex out of range");
  }

  // Hyperplane leg first; it needs only the factor sets and the basepoint.
  for (int c = 0; c < g.theta_class_count() && v.no_shared_hyperplane; ++c) {
    const Bits& h0 = g.halfspace(c, 0);
    bool t_any0 = false, t_any1 = false, f_any0 = false, f_any1 = false;
    for (int t : T) (h0.test(t) ? t_any0 : t_any1) = true;
    for (int f : F) (h0.test(f) ? f_any0 : f_any1) = true;
    if (t_any0 && t_any1 && f_any0 && f_any1) {
      v.no_shared_hyperplane = false;
      v.witness_class = c;
      bool base_side = h0.test(pd.basepoint);
      for (int f : F)
        if (h0.test(f) != base_side) {
          v.witness_f = f;
          break;
        }
      for (int t : T)
        if (h0.test(t) != base_side) {
          v.witness_t = t;
          break;
        }
      v.witness_mu = g.median(pd.basepoint, v.witness_t, v.witness_f);
    }
  }

  if (T.empty() || F.empty()) return invalid("empty factor");
  for (int t : T)
    if (!pd.members.test(t)) return invalid("factor_T not inside members");
  for (int f : F)
    if (!pd.members.test(f)) return invalid("factor_F not inside members");
  const int it1 = index_of(T, pd.basepoint);
  const int if1 = index_of(F, pd.basepoint);
  if (it1 < 0 || if1 < 0) return invalid("basepoint missing from a factor");
  if (pd.iso.size() != T.size()) return invalid("iso has wrong row count");
  for (const auto& row : pd.iso)
    if (row.size() != F.size()) return invalid("iso has wrong column count");

  // Identity on the basepoint slices.
  for (std::size_t j = 0; j < F.size(); ++j)
    if (pd.iso[it1][j] != F[j])
      return invalid("iso does not restrict to the identity on (t1, F)");
  for (std::size_t i = 0; i < T.size(); ++i)
    if (pd.iso[i][if1] != T[i])
      return invalid("iso does not restrict to the identity on (T, f1)");

  // Bijection onto the members.
  {
    std::set<int> image;
    for (const auto& row : pd.iso)
      for (int x : row) {
        if (x < 0 || x >= g.vertex_count() || !pd.members.test(x))
          return invalid("iso image leaves the member set");
        if (!image.insert(x).second) return invalid("iso is not injective");
      }
    if (image.size() != pd.members.count())
      return invalid("iso does not cover the member set");
  }

  // Median isomorphism for the product median function.
  const std::size_t cells = T.size() * F.size();
  if (cells * cells * cells > triple_budget)
    throw Error(ErrorCode::TooLarge, "product decomposition too large to validate");
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = a; b < cells; ++b)
      for (std::size_t c = b; c < cells; ++c) {
        int ta = static_cast<int>(a / F.size()), fa = static_cast<int>(a % F.size());
        int tb = static_cast<int>(b / F.size()), fb = static_cast<int>(b % F.size());
        int tc = static_cast<int>(c / F.size()), fc = static_cast<int>(c % F.size());
        int mt = index_of(T, g.median(T[ta], T[tb], T[tc]));
        int mf = index_of(F, g.median(F[fa], F[fb], F[fc]));
        if (mt < 0) return invalid("factor_T is not mu-closed");
        if (mf < 0) return invalid("factor_F is not mu-closed");
        int lhs = g.median(pd.iso[ta][fa], pd.iso[tb][fb], pd.iso[tc][fc]);
        if (lhs != pd.iso[mt][mf])
          return invalid("iso is not a median isomorphism at ((" + g.name(T[ta]) + "," +
                         g.name(F[fa]) + "),(" + g.name(T[tb]) + "," + g.name(F[fb]) +
                         "),(" + g.name(T[tc]) + "," + g.name(F[fc]) + "))");
      }

  return v;
}

bool classes_cross(const MedianGraph& g, int c1, int c2) {
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      if (!g.halfspace(c1, s1).intersects(g.halfspace(c2, s2))) return false;
  return true;
}

Factorization factorize(const MedianGraph& g) {
  const int k = g.theta_class_count();
  const int n = g.vertex_count();
  Factorization out;
  out.basepoint = 0;

  // Components of the non-crossing relation on theta classes.
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!classes_cross(g, i, j)) parent[find(i)] = find(j);

  std::unordered_map<int, int> root_to_group;
  for (int c = 0; c < k; ++c) {
    int r = find(c);
    if (root_to_group.find(r) == root_to_group.end()) {
      root_to_group.emplace(r, static_cast<int>(out.groups.size()));
      out.groups.emplace_back();
    }
    out.groups[root_to_group[r]].push_back(c);
  }
  const int m = static_cast<int>(out.groups.size());

  // Factor through the basepoint: reachable using one group's edges only.
  std::vector<int> group_of_class(k);
  for (int gi = 0; gi < m; ++gi)
    for (int c : out.groups[gi]) group_of_class[c] = gi;

  out.factor_vertices.resize(m);
  out.factor_graphs.resize(m);
  out.projection.assign(m, std::vector<int>(n, -1));

  std::size_t expected = 1;
  for (int gi = 0; gi < m; ++gi) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{out.basepoint};
    seen[out.basepoint] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < g.edge_count(); ++e) {
        if (group_of_class[g.edge_class(e)] != gi) continue;
        auto [a, b] = g.graph().edges[e];
        int w = -1;
        if (a == v) w = b;
        else if (b == v) w = a;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    auto& verts = out.factor_vertices[gi];
    for (int v = 0; v < n; ++v)
      if (seen[v]) verts.push_back(v);
    expected *= verts.size();

    Graph fg;
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      local[verts[i]] = static_cast<int>(i);
      fg.names.push_back(g.name(verts[i]));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (group_of_class[g.edge_class(e)] != gi) continue;
      auto [a, b] = g.graph().edges[e];
      if (local[a] >= 0 && local[b] >= 0) fg.edges.push_back({local[a], local[b]});
    }
    out.factor_graphs[gi] = std::move(fg);

    // Projection by matching the group's label bits.
    std::unordered_map<Bits, int, BitsHash> key_to_factor;
    Bits mask(k);
    for (int c : out.groups[gi]) mask.set(c);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      Bits key = g.label(verts[i]) & mask;
      key_to_factor.emplace(std::move(key), static_cast<int>(i));
    }
    for (int v = 0; v < n; ++v) {
      Bits key = g.label(v) & mask;
      auto it = key_to_factor.find(key);
      if (it == key_to_factor.end())
        throw Error(ErrorCode::Internal, "factor projection misses a label pattern");
      out.projection[gi][v] = it->second;
    }
  }

  // Internal verification: the factor product reassembles the graph.
  if (m > 0) {
    if (expected != static_cast<std::size_t>(n))
      throw Error(ErrorCode::Internal, "factor sizes do not multiply to the vertex count");
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.graph().edges[e];
      int gi = group_of_class[g.edge_class(e)];
      for (int gj = 0; gj < m; ++gj) {
        if (gj == gi) continue;
        if (out.projection[gj][a] != out.projection[gj][b])
          throw Error(ErrorCode::Internal, "edge moves more than one factor coordinate");
      }
      // moved coordinate must be a factor edge
      int pa = out.projection[gi][a], pb = out.projection[gi][b];
      bool found = false;
      for (auto [u, v] : out.factor_graphs[gi].edges)
        if ((u == pa && v == pb) || (u == pb && v == pa)) {
          found = true;
          break;
        }
      if (!found) throw Error(ErrorCode::Internal, "edge image missing from factor");
    }
    std::size_t product_edges = 0;
    for (int gi = 0; gi < m; ++gi) {
      std::size_t others = 1;
      for (int gj = 0; gj < m; ++gj)
        if (gj != gi) others *= out.factor_vertices[gj].size();
      product_edges += out.factor_graphs[gi].edges.size() * others;
    }
    if (product_edges != static_cast<std::size_t>(g.edge_count()))
      throw Error(ErrorCode::Internal, "product edge count mismatch");
  }
  return out;
}

}  // namespace cubemedian
