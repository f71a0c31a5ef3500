#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubemedian/bits.hpp"
#include "cubemedian/median_graph.hpp"

namespace cubemedian {

// A vertex subset closed under the median operation of its parent graph.
class Subalgebra {
public:
  // Smallest mu-closed superset of seed.
  static Subalgebra closure(std::shared_ptr<const MedianGraph> parent,
                            const std::vector<int>& seed);
  // Wraps an already-closed member set; throws NotSubalgebra with a witness
  // triple otherwise.
  static Subalgebra verified(std::shared_ptr<const MedianGraph> parent, Bits members);

  const MedianGraph& parent() const { return *parent_; }
  const std::shared_ptr<const MedianGraph>& parent_ptr() const { return parent_; }
  const Bits& members() const { return members_; }
  const std::vector<int>& member_list() const { return member_list_; }
  int member_count() const { return static_cast<int>(member_list_.size()); }

  // I(x,y) within the subalgebra = parent interval restricted to members.
  Bits interval_in(int x, int y) const;
  bool is_convex_in(const Bits& subset) const;

private:
  Subalgebra(std::shared_ptr<const MedianGraph> parent, Bits members);
  std::shared_ptr<const MedianGraph> parent_;
  Bits members_;
  std::vector<int> member_list_;
};

// A wall of a member set, canonicalized: side0 contains the smallest member.
struct WallPartition {
  Bits side0, side1;
  bool operator==(const WallPartition& o) const {
    return side0 == o.side0 && side1 == o.side1;
  }
  bool operator<(const WallPartition& o) const { return side0 < o.side0; }
};

// All partitions of the member set with both sides convex in the
// subalgebra's own median structure. Enumeration is exponential in the
// member count; past the cap this throws TooLarge.
std::vector<WallPartition> intrinsic_walls(const Subalgebra& y, int member_cap = 24);

// Restrictions of the parent's theta-class halfspaces to the member set,
// dropping one-sided restrictions, deduplicating equal ones.
std::vector<WallPartition> induced_walls(const Subalgebra& y);

struct AgreeVerdict {
  bool ok = true;
  std::optional<WallPartition> witness;
  std::string witness_origin;  // "induced-only" or "intrinsic-only"
};
// Induced and intrinsic walls must coincide as sets of unordered partitions.
AgreeVerdict check_lemma_agree(const Subalgebra& y, int member_cap = 24);

// A product structure on a subalgebra: iso maps factor_t x factor_f onto the
// members, restricting to the identity on the two basepoint slices.
struct ProductDecomposition {
  std::shared_ptr<const MedianGraph> parent;
  Bits members;
  int basepoint = 0;                  // t1 = f1 as a parent vertex
  std::vector<int> factor_t, factor_f;  // sorted member subsets, both contain basepoint
  std::vector<std::vector<int>> iso;  // iso[i][j] = member for (factor_t[i], factor_f[j])
};

struct ProductVerdict {
  bool valid = true;             // iso is a genuine product isomorphism
  std::string invalid_reason;
  bool no_shared_hyperplane = true;
  int witness_class = -1;        // parent theta class meeting both factors
  int witness_t = -1, witness_f = -1, witness_mu = -1;
  bool ok() const { return valid && no_shared_hyperplane; }
};

// Validates the decomposition, then checks that no parent hyperplane meets
// both factors. On a hyperplane failure the witness points (t1,f2), (t2,f1)
// and the median that contradicts the product structure are reported.
ProductVerdict check_lemma_product(const ProductDecomposition& pd,
                                   std::size_t triple_budget = std::size_t{1} << 26);

// Finest product decomposition: theta classes grouped by components of the
// non-crossing relation, one factor per group through the lowest vertex.
struct Factorization {
  std::vector<std::vector<int>> groups;  // theta class ids per group
  int basepoint = 0;
  std::vector<Graph> factor_graphs;
  std::vector<std::vector<int>> factor_vertices;  // parent ids per factor vertex
  std::vector<std::vector<int>> projection;       // [group][parent vertex] -> factor vertex
};
Factorization factorize(const MedianGraph& g);

// Do two theta classes cross (all four quarter intersections nonempty)?
bool classes_cross(const MedianGraph& g, int c1, int c2);

}  // namespace cubemedian
