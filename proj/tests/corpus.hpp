#pragma once

// Deterministic randomized corpora shared by the property tests and the
// acceptance suite.

#include <memory>
#include <random>
#include <vector>

#include "cubemedian/action.hpp"
#include "cubemedian/wallspace.hpp"

namespace corpus {

using Rng = std::mt19937_64;

// Random wallspace with 2..max_elements elements and 0..max_walls distinct
// walls.
cubemedian::Wallspace random_wallspace(Rng& rng, int max_elements = 10, int max_walls = 8);

// Cubulation of a random wallspace whose dual has at most max_vertices.
cubemedian::CubulationResult random_cubulation(Rng& rng, int max_vertices = 64,
                                               int max_elements = 10, int max_walls = 8);

std::shared_ptr<const cubemedian::MedianGraph> random_median_graph(Rng& rng,
                                                                   int max_vertices = 64);

// Random signed-permutation-affine grid map with |translations| <= max_trans.
cubemedian::SignedAffineMap random_grid_map(Rng& rng, int rank, long long max_trans = 5);

// Product isometries over a spread of small complexes: known automorphism
// groups for the finite parts, random grid parts with rank <= 3.
struct IsometryCorpus {
  std::vector<cubemedian::ProductComplexPtr> complexes;
  std::vector<cubemedian::ProductIsometry> isometries;
};
IsometryCorpus build_isometry_corpus(std::size_t count, std::uint64_t seed,
                                     long long max_trans = 5, int max_rank = 3);

// Commuting pairs: powers of corpus elements against themselves plus the
// worked diagonal-reflection pairs.
std::vector<std::pair<cubemedian::ProductIsometry, cubemedian::ProductIsometry>>
commuting_pairs(const IsometryCorpus& corpus, std::size_t limit, std::uint64_t seed);

}  // namespace corpus
