#include <benchmark/benchmark.h>

#include "curvegraph/audit.hpp"
#include "curvegraph/chains.hpp"
#include "curvegraph/curvature.hpp"

using namespace curvegraph;

static void BM_OllivierFigure1(benchmark::State& state) {
  const auto g = make_figure1();
  const auto x = g.index("x"), y = g.index("y");
  for (auto _ : state) benchmark::DoNotOptimize(ollivier_pair(g, x, y));
}
BENCHMARK(BM_OllivierFigure1);

// Cycles through the edges of one random graph of the given size.
static void BM_OllivierRandomAdjacent(benchmark::State& state) {
  audit::Rng rng(static_cast<std::uint64_t>(state.range(0)));
  const auto g = audit::random_graph(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  const auto edges = g.edges();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& e = edges[i++ % edges.size()];
    benchmark::DoNotOptimize(ollivier_pair(g, e.u, e.v));
  }
}
BENCHMARK(BM_OllivierRandomAdjacent)->Arg(20)->Arg(80)->Arg(320);

static void BM_EnumeratorRandomAdjacent(benchmark::State& state) {
  audit::Rng rng(5);
  const auto g = audit::random_graph(rng, 12, 12);
  const auto edges = g.edges();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& e = edges[i++ % edges.size()];
    benchmark::DoNotOptimize(audit::enumerate_lipschitz_optimum(g, g.index(e.u), g.index(e.v)));
  }
}
BENCHMARK(BM_EnumeratorRandomAdjacent);

static void BM_SphereCurvatureChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = bdc_as_graph(make_example_gprime(n));
  const auto d = rooted_decomposition(g, "0");
  for (auto _ : state) {
    OllivierCache cache(g);
    Rational sum(0);
    for (std::size_t r = 1; r <= d.horizon(); ++r) sum += sphere_curvature(g, d, r, cache);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_SphereCurvatureChain)->Arg(16)->Arg(128);

static void BM_CurvatureProfile(benchmark::State& state) {
  audit::Rng rng(9);
  const auto g = audit::random_graph(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_profile(g, rooted_decomposition(g, VertexIndex{0})));
}
BENCHMARK(BM_CurvatureProfile)->Arg(40)->Arg(1000);
BENCHMARK_MAIN();
