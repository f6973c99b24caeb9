#include <benchmark/benchmark.h>

#include "dwidth/dag_lean.hpp"
#include "dwidth/dpd_lean.hpp"
#include "dwidth/generate.hpp"
#include "dwidth/menger.hpp"

using namespace dwidth;

namespace {

Digraph gnp(int n, double p, std::uint64_t seed) { return generate({Model::kGnp, n, p, "", seed}); }

void BM_MaxDisjointPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph g = gnp(n, 0.2, 7);
  VertexSet from;
  VertexSet to;
  for (int v = 0; v < n / 4; ++v) {
    from.insert(v);
    to.insert(n - 1 - v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(max_disjoint_paths(g, from, to));
}
BENCHMARK(BM_MaxDisjointPaths)->Arg(16)->Arg(32)->Arg(64);

void BM_MinSeparatorWeighted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph g = gnp(n, 0.2, 11);
  const std::vector<std::int64_t> weights(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_separator_weighted(g, VertexSet{0, 1}, VertexSet{n - 2, n - 1}, weights));
  }
}
BENCHMARK(BM_MinSeparatorWeighted)->Arg(16)->Arg(32)->Arg(64);

void BM_ExactDpw(benchmark::State& state) {
  const Digraph g = gnp(static_cast<int>(state.range(0)), 0.25, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_dpw(g));
}
BENCHMARK(BM_ExactDpw)->DenseRange(8, 16, 4);

void BM_CheckLeanDpd(benchmark::State& state) {
  const Digraph g = gnp(static_cast<int>(state.range(0)), 0.3, 5);
  const PathDecomposition d = exact_dpw(g).decomposition;
  for (auto _ : state) benchmark::DoNotOptimize(check_lean_dpd(g, d));
}
BENCHMARK(BM_CheckLeanDpd)->DenseRange(5, 9, 2);

void BM_LeanifyDpd(benchmark::State& state) {
  const Digraph g = gnp(static_cast<int>(state.range(0)), 0.3, 9);
  const PathDecomposition d{{g.vertices()}};
  for (auto _ : state) benchmark::DoNotOptimize(leanify_dpd(g, d));
}
BENCHMARK(BM_LeanifyDpd)->DenseRange(4, 7, 1);

void BM_LeanifyDagdec(benchmark::State& state) {
  const Digraph g = gnp(static_cast<int>(state.range(0)), 0.3, 9);
  const DagDecomposition d = dpd_to_dagdec(g, exact_dpw(g).decomposition);
  for (auto _ : state) benchmark::DoNotOptimize(leanify_dagdec(g, d));
}
BENCHMARK(BM_LeanifyDagdec)->DenseRange(3, 5, 1);

}  // namespace

BENCHMARK_MAIN();
