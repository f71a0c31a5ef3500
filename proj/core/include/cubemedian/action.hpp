#pragma once

#include <string>
#include <vector>

#include "cubemedian/isometry.hpp"

namespace cubemedian {

// Finitely many commuting named generators acting on one product complex.
// Words are exponent vectors over the generators; evaluation is a
// homomorphism because commutation is verified pairwise on construction.
struct AbelianAction {
  ProductComplexPtr complex;
  std::vector<std::string> generator_names;
  std::vector<ProductIsometry> generators;

  int generator_count() const { return static_cast<int>(generators.size()); }
  ProductIsometry evaluate(const std::vector<long long>& word) const;
};

AbelianAction build_action(ProductComplexPtr complex, std::vector<std::string> names,
                           std::vector<ProductIsometry> generators);

// The action subdivided once, generators transported.
struct SubdividedAction {
  SubdividedProduct subdivision;
  AbelianAction action;
};
SubdividedAction subdivide_action(const AbelianAction& a);

using WordList = std::vector<std::vector<long long>>;
// All nonzero exponent vectors with l-infinity norm <= max_exp.
WordList default_word_sample(int generator_count, int max_exp = 3);

struct FreenessCounterexample {
  std::vector<long long> word;
  CubeWitness stabilized_cube;  // cube of the original complex
};
struct FreenessVerdict {
  bool free_on_sample = true;
  std::vector<FreenessCounterexample> counterexamples;
};
// After internal subdivision every sampled nonzero word must be loxodromic;
// elliptic words are returned as freeness counterexamples.
FreenessVerdict check_freeness(const AbelianAction& a, const WordList& words);

struct HomogeneityViolation {
  std::vector<long long> word;
  long long m = 0;
  BigInt expected = 0, actual = 0;
};

struct SubadditivityRecord {
  std::vector<long long> left, right;
  bool power_search_failed = false;
  bool searched_on_original = true;
  int m = 0;
  ProductVertex witness;  // subdivided coordinates
  BigInt nu_left = 0, nu_right = 0, nu_sum = 0;
  BigInt lhs = 0;            // |m| nu(g+h)
  BigInt at_witness = 0;     // d(x, h^m g^m x)
  BigInt leg_left = 0;       // d(x, g^m x)
  BigInt leg_right = 0;      // d(g^m x, h^m g^m x)
  BigInt rhs = 0;            // |m| (nu(g) + nu(h))
  bool ok = false;
};

struct DiscreteNormReport {
  std::vector<std::string> generator_names;
  bool subdivided = true;
  int epsilon = 1;
  long long power_cap = 4;
  std::vector<std::pair<std::vector<long long>, BigInt>> samples;  // lexicographic

  bool positivity_ok = true;
  std::vector<std::vector<long long>> positivity_violations;

  bool homogeneity_ok = true;
  std::uint64_t homogeneity_checked = 0;
  std::vector<HomogeneityViolation> homogeneity_violations;

  bool subadditivity_ok = true;
  std::vector<SubadditivityRecord> pairs;
  std::vector<std::pair<std::vector<long long>, std::vector<long long>>> power_search_failures;

  bool all_ok() const {
    return positivity_ok && homogeneity_ok && subadditivity_ok &&
           power_search_failures.empty();
  }
};

// Mechanizes the norm construction: subdivides, sets nu = translation length,
// and certifies positivity (epsilon = 1), homogeneity, and subadditivity via
// the per-pair power trick, all as integer identities. Values are in
// subdivided units; halve for the original scale.
DiscreteNormReport certify_discrete_norm(const AbelianAction& a, const WordList& words,
                                         long long power_cap = 4);

}  // namespace cubemedian
