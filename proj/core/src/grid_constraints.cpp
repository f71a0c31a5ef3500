#include "cubemedian/grid_constraints.hpp"

#include <algorithm>

#include "cubemedian/errors.hpp"

namespace cubemedian {

bool Utvpi::satisfied(const GridVec& v) const {
  BigInt lhs = 0;
  if (a) lhs += BigInt(a) * v[i];
  if (b) lhs += BigInt(b) * v[j];
  return lhs <= c;
}

bool GridConstraintSet::contains(const GridVec& v) const {
  if (static_cast<int>(v.size()) != rank) return false;
  for (const auto& br : branches) {
    bool ok = true;
    for (const auto& c : br.constraints)
      if (!c.satisfied(v)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

namespace {

void push_eq(std::vector<Utvpi>& out, int i, const BigInt& value) {
  out.push_back(Utvpi{1, i, 0, -1, value});
  out.push_back(Utvpi{-1, i, 0, -1, -value});
}

// delta_t * v[ct] - delta_s * v[cs] <= c
void push_diff(std::vector<Utvpi>& out, int dt, int ct, int ds, int cs, const BigInt& c) {
  out.push_back(Utvpi{dt, ct, -ds, cs, c});
}

}  // namespace

GridConstraintSet grid_argmin(const SignedAffineMap& m) {
  GridConstraintSet out;
  out.rank = m.rank();

  // Per-cycle branch alternatives; the set is their cross product.
  std::vector<std::vector<std::vector<Utvpi>>> cycle_branches;

  for (const auto& cyc : m.cycles()) {
    const int len = static_cast<int>(cyc.coords.size());
    CycleConstraintRecord rec;
    rec.coords = cyc.coords;
    rec.sign = cyc.sign;
    rec.net = cyc.net;
    rec.parity = cyc.parity;

    std::vector<std::vector<Utvpi>> alts;
    if (cyc.sign > 0) {
      rec.kind = "linear";
      std::vector<Utvpi> cons;
      if (len > 1) {
        const int dir = cyc.net > 0 ? 1 : (cyc.net < 0 ? -1 : 0);
        // slack terms: chain a_t = w_{t-1} - w_t + beta_t, wrap a_0 = w_{l-1} - w_0 + beta_0;
        // all must carry the sign of the net (both signs when net == 0).
        auto emit = [&](int lo_t, int lo_c, int hi_t, int hi_c, const BigInt& beta) {
          // a = w_lo - w_hi + beta with w = delta * v
          if (dir >= 0)  // a >= 0  <=>  w_hi - w_lo <= beta
            push_diff(cons, cyc.delta[hi_t], hi_c, cyc.delta[lo_t], lo_c, beta);
          if (dir <= 0)  // a <= 0  <=>  w_lo - w_hi <= -beta
            push_diff(cons, cyc.delta[lo_t], lo_c, cyc.delta[hi_t], hi_c, -beta);
        };
        for (int t = 1; t < len; ++t)
          emit(t - 1, cyc.coords[t - 1], t, cyc.coords[t], cyc.beta[t]);
        emit(len - 1, cyc.coords[len - 1], 0, cyc.coords[0], cyc.beta[0]);
      }
      alts.push_back(std::move(cons));
    } else if (cyc.parity == 0) {
      rec.kind = "fixed";
      std::vector<Utvpi> cons;
      BigInt psum = 0;
      for (int t = 1; t < len; ++t) psum += cyc.beta[t];
      std::vector<BigInt> w(len);
      w[0] = (cyc.beta[0] - psum) / 2;
      for (int t = 1; t < len; ++t) w[t] = w[t - 1] + cyc.beta[t];
      for (int t = 0; t < len; ++t)
        push_eq(cons, cyc.coords[t], BigInt(cyc.delta[t]) * w[t]);
      alts.push_back(std::move(cons));
    } else {
      rec.kind = "parity";
      // exactly one displacement term is +-1; each choice pins the cycle
      std::vector<GridVec> points;
      for (int q = 0; q < len; ++q)
        for (int sgn : {1, -1}) {
          BigInt psum = 0;
          for (int t = 1; t < len; ++t) {
            psum += cyc.beta[t];
            if (t == q) psum -= sgn;
          }
          BigInt two_w0 = cyc.beta[0] - psum - (q == 0 ? BigInt(sgn) : BigInt(0));
          if (two_w0 % 2 != 0) continue;
          std::vector<BigInt> w(len);
          w[0] = two_w0 / 2;
          for (int t = 1; t < len; ++t) {
            w[t] = w[t - 1] + cyc.beta[t];
            if (t == q) w[t] -= sgn;
          }
          GridVec pt(len);
          for (int t = 0; t < len; ++t) pt[t] = BigInt(cyc.delta[t]) * w[t];
          if (std::find(points.begin(), points.end(), pt) == points.end())
            points.push_back(std::move(pt));
        }
      for (const auto& pt : points) {
        std::vector<Utvpi> cons;
        for (int t = 0; t < len; ++t) push_eq(cons, cyc.coords[t], pt[t]);
        alts.push_back(std::move(cons));
      }
      if (alts.empty())
        throw Error(ErrorCode::Internal, "odd negative cycle produced no argmin points");
    }
    out.cycle_records.push_back(std::move(rec));
    cycle_branches.push_back(std::move(alts));
  }

  // cross product of per-cycle alternatives
  out.branches.push_back({});
  for (const auto& alts : cycle_branches) {
    std::vector<ConstraintBranch> next;
    next.reserve(out.branches.size() * alts.size());
    for (const auto& base : out.branches)
      for (const auto& alt : alts) {
        ConstraintBranch nb = base;
        nb.constraints.insert(nb.constraints.end(), alt.begin(), alt.end());
        next.push_back(std::move(nb));
      }
    out.branches = std::move(next);
  }
  return out;
}

namespace {

// Shortest-path weight that may be infinite.
struct Weight {
  bool inf = true;
  BigInt v = 0;
};

bool improve(Weight& w, const BigInt& candidate) {
  if (w.inf || candidate < w.v) {
    w.inf = false;
    w.v = candidate;
    return true;
  }
  return false;
}

struct UtvpiGraph {
  int k;
  std::vector<std::vector<Weight>> dist;  // (2k)^2, dist[u][u] = 0

  explicit UtvpiGraph(int rank) : k(rank), dist(2 * rank, std::vector<Weight>(2 * rank)) {
    for (int u = 0; u < 2 * k; ++u) improve(dist[u][u], 0);
  }
  // node for +v_i is 2i, for -v_i is 2i+1
  static int pos(int i) { return 2 * i; }
  static int neg(int i) { return 2 * i + 1; }

  void add_edge(int u, int w, const BigInt& c) {
    if (!dist[u][w].inf && dist[u][w].v <= c) return;
    dist[u][w].inf = false;
    dist[u][w].v = c;
  }

  // add constraint val(w) - val(u) <= c as edge u -> w
  void add_utvpi(const Utvpi& c) {
    if (c.a == 0 && c.b == 0) {
      if (c.c < 0) add_edge(0, 0, BigInt(-1));  // constant infeasibility
      return;
    }
    if (c.b == 0 || c.j == c.i) {
      int coeff = c.a + ((c.j == c.i) ? c.b : 0);
      if (coeff == 0) {
        if (c.c < 0) add_edge(0, 0, BigInt(-1));
        return;
      }
      // coeff * v_i <= c; |coeff| is 1 or 2
      BigInt bound2;  // encode 2*v_i <= bound2 or -2*v_i <= bound2
      bool positive = coeff > 0;
      int mag = positive ? coeff : -coeff;
      if (mag == 1) {
        bound2 = 2 * c.c;
      } else {  // floor(c/2)*2
        BigInt half = c.c >= 0 ? BigInt(c.c / 2) : BigInt(-((-c.c + 1) / 2));
        bound2 = 2 * half;
      }
      if (positive) add_edge(neg(c.i), pos(c.i), bound2);
      else add_edge(pos(c.i), neg(c.i), bound2);
      return;
    }
    if (c.a == 1 && c.b == -1) {  // v_i - v_j <= c
      add_edge(pos(c.j), pos(c.i), c.c);
      add_edge(neg(c.i), neg(c.j), c.c);
    } else if (c.a == -1 && c.b == 1) {
      add_edge(pos(c.i), pos(c.j), c.c);
      add_edge(neg(c.j), neg(c.i), c.c);
    } else if (c.a == 1 && c.b == 1) {  // v_i + v_j <= c
      add_edge(neg(c.j), pos(c.i), c.c);
      add_edge(neg(c.i), pos(c.j), c.c);
    } else if (c.a == -1 && c.b == -1) {
      add_edge(pos(c.j), neg(c.i), c.c);
      add_edge(pos(c.i), neg(c.j), c.c);
    } else {
      throw Error(ErrorCode::Internal, "constraint coefficients outside {-1,0,1}");
    }
  }

  void closure() {
    const int n = 2 * k;
    for (int m = 0; m < n; ++m)
      for (int u = 0; u < n; ++u) {
        if (dist[u][m].inf) continue;
        for (int w = 0; w < n; ++w) {
          if (dist[m][w].inf) continue;
          improve(dist[u][w], dist[u][m].v + dist[m][w].v);
        }
      }
  }

  bool negative_cycle() const {
    for (int u = 0; u < 2 * k; ++u)
      if (!dist[u][u].inf && dist[u][u].v < 0) return true;
    return false;
  }

  // Round odd self-distances between v_i's two nodes down to even; returns
  // whether anything changed (integer tightening).
  bool tighten() {
    bool changed = false;
    for (int i = 0; i < k; ++i) {
      for (auto [u, w] : {std::pair{pos(i), neg(i)}, std::pair{neg(i), pos(i)}}) {
        auto& d = dist[u][w];
        if (!d.inf && ((d.v % 2) + 2) % 2 == 1) {
          d.v -= 1;
          changed = true;
        }
      }
    }
    return changed;
  }
};

}  // namespace

namespace {

// closure + parity tightening to a fixed point; false when integer-infeasible
bool settle(UtvpiGraph& g) {
  g.closure();
  if (g.negative_cycle()) return false;
  int guard = 8 * g.k + 8;
  while (g.tighten()) {
    g.closure();
    if (g.negative_cycle()) return false;
    if (--guard < 0) throw Error(ErrorCode::Internal, "UTVPI tightening did not settle");
  }
  return true;
}

}  // namespace

std::optional<GridVec> branch_model(const std::vector<Utvpi>& constraints, int rank) {
  if (rank == 0) {
    for (const auto& c : constraints)
      if (c.a == 0 && c.b == 0 && c.c < 0) return std::nullopt;
    return GridVec{};
  }
  UtvpiGraph g(rank);
  for (const auto& c : constraints) g.add_utvpi(c);
  if (!settle(g)) return std::nullopt;

  // Assign variables one by one to an implied bound, re-settling after each.
  GridVec model(rank, 0);
  for (int i = 0; i < rank; ++i) {
    const auto& down = g.dist[UtvpiGraph::pos(i)][UtvpiGraph::neg(i)];  // -2 v_i <= .
    const auto& up = g.dist[UtvpiGraph::neg(i)][UtvpiGraph::pos(i)];    //  2 v_i <= .
    std::vector<BigInt> candidates;
    if (!down.inf) candidates.push_back(-(down.v / 2));  // exact lower bound (even)
    if (!up.inf) {
      BigInt upper = up.v / 2;
      candidates.push_back(upper < 0 ? upper : BigInt(0));
      candidates.push_back(upper);
    }
    if (candidates.empty()) candidates.push_back(0);
    bool fixed = false;
    for (const auto& value : candidates) {
      UtvpiGraph trial = g;
      trial.add_edge(UtvpiGraph::neg(i), UtvpiGraph::pos(i), 2 * value);
      trial.add_edge(UtvpiGraph::pos(i), UtvpiGraph::neg(i), -2 * value);
      if (!settle(trial)) continue;
      g = std::move(trial);
      model[i] = value;
      fixed = true;
      break;
    }
    if (!fixed)
      throw Error(ErrorCode::Internal, "UTVPI model extraction hit an infeasible fix");
  }
  return model;
}

std::optional<GridVec> intersection_model(const GridConstraintSet& a,
                                          const GridConstraintSet& b) {
  if (a.rank != b.rank)
    throw Error(ErrorCode::MismatchedComplex, "constraint sets have different ranks");
  for (const auto& ba : a.branches)
    for (const auto& bb : b.branches) {
      std::vector<Utvpi> merged = ba.constraints;
      merged.insert(merged.end(), bb.constraints.begin(), bb.constraints.end());
      if (auto m = branch_model(merged, a.rank)) return m;
    }
  return std::nullopt;
}

bool intersection_nonempty(const GridConstraintSet& a, const GridConstraintSet& b) {
  return intersection_model(a, b).has_value();
}

}  // namespace cubemedian
