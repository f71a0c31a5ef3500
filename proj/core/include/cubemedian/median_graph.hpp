#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubemedian/bits.hpp"
#include "cubemedian/graph.hpp"

namespace cubemedian {

struct VerifyOptions {
  // Up to this many vertices, axioms are certified over all triples; above,
  // a seeded pseudo-random sample of triples is used and the result is
  // reported as sampled.
  std::size_t full_check_limit = 2000;
  std::size_t sampled_triples = 1'000'000;
  std::uint64_t sample_seed = 0x6d656469616eULL;
  std::size_t max_vertices = 200'000;
};

// A connected graph whose vertices form a discrete median algebra, enriched
// with its theta classes (hyperplanes), halfspaces, and per-vertex halfspace
// labels. Immutable after construction; all queries are const.
class MedianGraph {
public:
  // verify_median: checks the median axioms and computes the enrichment.
  // Throws Disconnected / NotMedian (with witness triple) / TooLarge.
  static MedianGraph verify(Graph g, const VerifyOptions& opts = {});

  int vertex_count() const { return static_cast<int>(graph_.names.size()); }
  int edge_count() const { return static_cast<int>(graph_.edges.size()); }
  const Graph& graph() const { return graph_; }
  const std::string& name(int v) const { return graph_.names[v]; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool sampled_verification() const { return sampled_; }

  int theta_class_count() const { return static_cast<int>(class_sides_.size()); }
  // Side 0 is the halfspace containing vertex 0.
  const Bits& halfspace(int cls, int side) const { return class_sides_[cls][side]; }
  // For vertex v: which side of class c it lies on.
  bool side_of(int cls, int v) const { return labels_[v].test(cls); }
  const Bits& label(int v) const { return labels_[v]; }
  int edge_class(int edge_index) const { return edge_class_[edge_index]; }
  std::optional<int> vertex_with_label(const Bits& lab) const;

  int distance(int x, int y) const { return static_cast<int>(labels_[x].hamming(labels_[y])); }
  int median(int x, int y, int z) const;

  // I(x,y) as a vertex set.
  Bits interval_bits(int x, int y) const;
  std::vector<int> interval(int x, int y) const { return interval_bits(x, y).to_indices(); }
  bool is_convex(const Bits& subset) const;

  // Lexicographically least geodesic from x to y (inclusive endpoints).
  std::vector<int> shortest_path(int x, int y) const;

  // Image of a theta class under an automorphism phi: (class, sides swapped?).
  std::pair<int, bool> class_image(const std::vector<int>& phi, int cls) const;

  int diameter() const;

  // Smallest n >= 1 with phi^n = id. Throws TooLarge past the cap.
  static int automorphism_order(const std::vector<int>& phi, int cap = 1 << 20);

private:
  MedianGraph() = default;

  Graph graph_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> edge_class_;
  std::vector<std::array<Bits, 2>> class_sides_;
  std::vector<Bits> labels_;  // bit c of labels_[v] == side_of(c, v)
  std::unordered_map<Bits, int, BitsHash> label_to_vertex_;
  bool sampled_ = false;
};

// Direct evaluation of the three median-algebra axioms on a verified graph.
// Axioms 1 and 2 run over all pairs/triples; axiom 3 runs over all
// quadruples up to `quad_budget` of them, then over a seeded sample.
struct AxiomCheckResult {
  bool ok = true;
  std::array<int, 4> witness{{-1, -1, -1, -1}};
  std::string which;  // "mu(x,y,y)=y", "symmetry", "associativity"
  std::uint64_t evaluations = 0;
  bool quadruples_sampled = false;
};
AxiomCheckResult check_median_axioms(const MedianGraph& g,
                                     std::uint64_t quad_budget = 1u << 22,
                                     std::uint64_t seed = 0x71756164ULL);

}  // namespace cubemedian
