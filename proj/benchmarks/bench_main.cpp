#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "cubemedian/action.hpp"
#include "cubemedian/cube_complex.hpp"
#include "cubemedian/fixtures.hpp"
#include "cubemedian/isometry.hpp"
#include "cubemedian/wallspace.hpp"

namespace {

using namespace cubemedian;

Graph hypercube(int d) {
  Graph g;
  for (int v = 0; v < (1 << d); ++v) g.names.push_back("q" + std::to_string(v));
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (!((v >> b) & 1)) g.edges.push_back({v, v | (1 << b)});
  return g;
}

Wallspace random_wallspace(std::mt19937_64& rng, int elements, int walls) {
  std::vector<std::string> names;
  for (int i = 0; i < elements; ++i) names.push_back("e" + std::to_string(i));
  std::vector<RawWall> raw;
  std::set<std::uint64_t> seen;
  while (static_cast<int>(raw.size()) < walls) {
    std::uint64_t mask = rng() & ((1ull << elements) - 1);
    if (mask == 0 || mask == (1ull << elements) - 1) continue;
    std::uint64_t canon = (mask & 1) ? mask : (~mask & ((1ull << elements) - 1));
    if (!seen.insert(canon).second) continue;
    RawWall w;
    for (int i = 0; i < elements; ++i) ((mask >> i) & 1 ? w.side_a : w.side_b).push_back(i);
    raw.push_back(std::move(w));
  }
  return validate_wallspace(std::move(names), raw);
}

void BM_Cubulate(benchmark::State& state) {
  std::mt19937_64 rng(42);
  Wallspace w = random_wallspace(rng, 10, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cubulate(w));
  }
}
BENCHMARK(BM_Cubulate)->Arg(6)->Arg(8)->Arg(10);

void BM_VerifyMedianHypercube(benchmark::State& state) {
  Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MedianGraph::verify(g));
  }
}
BENCHMARK(BM_VerifyMedianHypercube)->Arg(4)->Arg(6)->Arg(7);

void BM_MedianQuery(benchmark::State& state) {
  MedianGraph g = MedianGraph::verify(hypercube(8));
  std::mt19937_64 rng(7);
  const int n = g.vertex_count();
  for (auto _ : state) {
    int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n),
        z = static_cast<int>(rng() % n);
    benchmark::DoNotOptimize(g.median(x, y, z));
  }
}
BENCHMARK(BM_MedianQuery);

void BM_SubdivideCube(benchmark::State& state) {
  MedianGraph g = MedianGraph::verify(hypercube(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(subdivide(g));
  }
}
BENCHMARK(BM_SubdivideCube)->Arg(2)->Arg(3)->Arg(4);

void BM_ClassifyWorkedExample(benchmark::State& state) {
  Fixture f = build_fixture("paper-example");
  const ProductIsometry& g = f.action->generators[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(g));
  }
}
BENCHMARK(BM_ClassifyWorkedExample);

void BM_CommonMinPower(benchmark::State& state) {
  Fixture f = build_fixture("paper-example");
  const auto& g = f.action->generators[0];
  const auto& h = f.action->generators[1];
  for (auto _ : state) {
    benchmark::DoNotOptimize(common_min_power(g, h, 8));
  }
}
BENCHMARK(BM_CommonMinPower);

void BM_CertifyNorm(benchmark::State& state) {
  Fixture f = build_fixture("grid-z2");
  WordList words = default_word_sample(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_discrete_norm(*f.action, words));
  }
}
BENCHMARK(BM_CertifyNorm)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
