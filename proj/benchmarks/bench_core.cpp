#include <benchmark/benchmark.h>

#include <random>

#include "monodromy/mapping_torus.hpp"
#include "monodromy/normal_form.hpp"
#include "monodromy/polytope.hpp"
#include "monodromy/random.hpp"

using namespace monodromy;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  IntMatrix m = random_integer_matrix(rng, n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 16, 4);

static void BM_Certify(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(UnimodularSampler{g, 3}(rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(certify(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_Certify)->DenseRange(2, 10, 2);

static void BM_ThicknessAndDifferenceBody(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-20, 20);
  std::vector<RatVector> pts(12, RatVector(d));
  for (auto& p : pts)
    for (auto& x : p) x = c(rng);
  Polytope P = Polytope::from_points(d, pts);
  Covector w{RatVector(d, Rational(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(thickness(P, w));
    benchmark::DoNotOptimize(difference_body(P));
  }
}
BENCHMARK(BM_ThicknessAndDifferenceBody)->DenseRange(2, 4, 1);
BENCHMARK_MAIN();
