#include <doctest.h>

#include "corpus.hpp"
#include "cubemedian/action.hpp"
#include "cubemedian/errors.hpp"
#include "cubemedian/fixtures.hpp"
#include "oracles.hpp"

using namespace cubemedian;

TEST_CASE("build_action accepts commuting generators and rejects others") {
  CHECK(build_fixture("grid-z2").action->generator_count() == 2);
  CHECK(build_fixture("paper-example").action->generator_count() == 2);

  // a rotation and a diagonal reflection of the square do not commute
  Graph sq = build_fixture("square").graph;
  auto pc = make_product_complex(std::make_shared<MedianGraph>(MedianGraph::verify(sq)), 1);
  auto rot = make_isometry(pc, {1, 3, 0, 2}, SignedAffineMap::translation({BigInt(1)}));
  auto refl = make_isometry(pc, {0, 2, 1, 3}, SignedAffineMap::translation({BigInt(1)}));
  try {
    build_action(pc, {"r", "d"}, {rot, refl});
    FAIL("expected NotCommuting");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCommuting);
  }
}

TEST_CASE("word evaluation is a homomorphism") {
  auto a = *build_fixture("grid-z2").action;
  corpus::Rng rng(0x770);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<long long> u{static_cast<long long>(rng() % 7) - 3,
                             static_cast<long long>(rng() % 7) - 3};
    std::vector<long long> v{static_cast<long long>(rng() % 7) - 3,
                             static_cast<long long>(rng() % 7) - 3};
    std::vector<long long> sum{u[0] + v[0], u[1] + v[1]};
    CHECK(compose(a.evaluate(u), a.evaluate(v)) == a.evaluate(sum));
  }
}

TEST_CASE("check_freeness: unit translations are free on the +-5 sample") {
  auto a = *build_fixture("grid-z1").action;
  WordList words;
  for (long long k = 1; k <= 5; ++k) {
    words.push_back({k});
    words.push_back({-k});
  }
  FreenessVerdict v = check_freeness(a, words);
  CHECK(v.free_on_sample);
  CHECK(v.counterexamples.empty());
}

TEST_CASE("check_freeness: the line reflection stabilizes the edge {0,1}") {
  Graph p;
  p.names = {"pt"};
  auto pc = make_product_complex(std::make_shared<MedianGraph>(MedianGraph::verify(p)), 1);
  auto r = make_isometry(pc, {0}, SignedAffineMap({0}, {-1}, {BigInt(1)}));
  auto a = build_action(pc, {"r"}, {r});
  FreenessVerdict v = check_freeness(a, {{1}});
  CHECK_FALSE(v.free_on_sample);
  REQUIRE(v.counterexamples.size() == 1);
  const auto& cube = v.counterexamples[0].stabilized_cube;
  REQUIRE(cube.grid_intervals.size() == 1);
  CHECK(cube.grid_intervals[0][0] == 0);
  CHECK(cube.grid_intervals[0][1] == 1);
}

TEST_CASE("check_freeness on the worked example depends on the translation amounts") {
  // with both translations 1 the word g - h is the antipodal map with no
  // shift: it stabilizes the square, so the sampled action is not free
  auto strict = *build_fixture("paper-example").action;
  FreenessVerdict v1 = check_freeness(strict, default_word_sample(2));
  CHECK_FALSE(v1.free_on_sample);
  bool found_g_minus_h = false;
  for (const auto& c : v1.counterexamples) {
    if (c.word == std::vector<long long>{1, -1} || c.word == std::vector<long long>{-1, 1}) {
      found_g_minus_h = true;
      CHECK(c.stabilized_cube.finite_corners.size() == 4);  // the whole square
    }
  }
  CHECK(found_g_minus_h);

  // translations 1 and 4 kill every sampled relation
  auto free = *build_fixture("paper-example-free").action;
  FreenessVerdict v2 = check_freeness(free, default_word_sample(2));
  CHECK(v2.free_on_sample);
}

TEST_CASE("certify_discrete_norm: Z^2 by translations") {
  auto a = *build_fixture("grid-z2").action;
  DiscreteNormReport rep = certify_discrete_norm(a, default_word_sample(2));
  CHECK(rep.all_ok());
  CHECK(rep.positivity_ok);
  CHECK(rep.homogeneity_ok);
  CHECK(rep.subadditivity_ok);
  CHECK(rep.power_search_failures.empty());
  // nu((p, q)) = 2(|p| + |q|) in subdivided units
  for (const auto& [w, value] : rep.samples)
    CHECK(value == BigInt(2 * (std::abs(w[0]) + std::abs(w[1]))));
}

TEST_CASE("certify_discrete_norm: single generator gives nu(k) = 2k") {
  auto a = *build_fixture("grid-z1").action;
  WordList words;
  for (long long k = 1; k <= 5; ++k) words.push_back({k});
  DiscreteNormReport rep = certify_discrete_norm(a, words);
  CHECK(rep.all_ok());
  for (const auto& [w, value] : rep.samples) CHECK(value == BigInt(2 * w[0]));
}

TEST_CASE("certify_discrete_norm: the free worked example passes all axioms") {
  auto a = *build_fixture("paper-example-free").action;
  DiscreteNormReport rep = certify_discrete_norm(a, default_word_sample(2));
  CHECK(rep.all_ok());
  // nu is 2|a + 4b| in subdivided units: check the generators
  for (const auto& [w, value] : rep.samples) {
    long long shift = w[0] + 4 * w[1];
    CHECK(value == BigInt(2 * std::abs(shift)));
  }
  // the generator pair uses the worked example's power m = 2, with a witness
  // over the fixed diagonal {00, 11}
  bool found_pair = false;
  SubdividedAction sub = subdivide_action(a);
  for (const auto& p : rep.pairs) {
    if (p.left == std::vector<long long>{0, 1} && p.right == std::vector<long long>{1, 0}) {
      found_pair = true;
      CHECK(p.m == 2);
      CHECK(p.searched_on_original);
      CHECK(p.ok);
      // words sort lexicographically, so the left word is h = (0,1); the
      // witness lies in Min h over its fixed diagonal {01, 10}
      int v01 = sub.subdivision.finite_subdivision->vertex_image[1];
      int v10 = sub.subdivision.finite_subdivision->vertex_image[2];
      CHECK((p.witness.finite_vertex == v01 || p.witness.finite_vertex == v10));
    }
  }
  CHECK(found_pair);
}

TEST_CASE("certify_discrete_norm rejects the non-free sampled action") {
  auto a = *build_fixture("paper-example").action;
  try {
    certify_discrete_norm(a, default_word_sample(2));
    FAIL("expected NotFreeOnSample");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFreeOnSample);
  }
}

TEST_CASE("nu is symmetric and vanishes only at the identity word") {
  auto a = *build_fixture("grid-z2").action;
  SubdividedAction sub = subdivide_action(a);
  corpus::Rng rng(0x5AD);
  for (int iter = 0; iter < 15; ++iter) {
    std::vector<long long> w{static_cast<long long>(rng() % 9) - 4,
                             static_cast<long long>(rng() % 9) - 4};
    std::vector<long long> neg{-w[0], -w[1]};
    BigInt nu_w = translation_length(sub.action.evaluate(w));
    CHECK(nu_w == translation_length(sub.action.evaluate(neg)));
    CHECK((nu_w == 0) == (w[0] == 0 && w[1] == 0));
  }
  CHECK(translation_length(sub.action.evaluate({0, 0})) == 0);
}

TEST_CASE("default word sample covers the exponent box without zero") {
  WordList words = default_word_sample(2, 3);
  CHECK(words.size() == 48);  // 7^2 - 1
  for (const auto& w : words) {
    CHECK(std::max(std::abs(w[0]), std::abs(w[1])) <= 3);
    CHECK((w[0] != 0 || w[1] != 0));
  }
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("certificates are monotone under sample growth") {
  auto a = *build_fixture("grid-z2").action;
  DiscreteNormReport small = certify_discrete_norm(a, default_word_sample(2, 2));
  DiscreteNormReport large = certify_discrete_norm(a, default_word_sample(2, 3));
  CHECK(small.all_ok());
  CHECK(large.all_ok());
  // every small-sample value recurs unchanged in the larger certificate
  for (const auto& [w, value] : small.samples) {
    bool found = false;
    for (const auto& [w2, value2] : large.samples)
      if (w2 == w) {
        found = true;
        CHECK(value2 == value);
      }
    CHECK(found);
  }
}

TEST_CASE("zero words are rejected up front") {
  auto a = *build_fixture("grid-z1").action;
  try {
    check_freeness(a, {{0}});
    FAIL("expected InvalidDocument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDocument);
  }
}
