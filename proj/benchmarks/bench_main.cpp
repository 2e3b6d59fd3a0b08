#include <benchmark/benchmark.h>

#include <map>

#include "ecut/construction.hpp"
#include "ecut/eigensolvers.hpp"
#include "ecut/expanders.hpp"
#include "ecut/mixing.hpp"
#include "ecut/montecarlo.hpp"

using namespace ecut;

namespace {

const LeveledGraph& five_h2() {
  static const LeveledGraph g = [] {
    ConstructionParams p;
    p.h = 2;
    p.L = 2;
    p.override_L = true;
    return build_five_regular(p);
  }();
  return g;
}

const LeveledGraph& five_truncated(int h) {
  static std::map<int, LeveledGraph> cache;
  auto it = cache.find(h);
  if (it == cache.end()) {
    ConstructionParams p;
    p.h = h;
    p.L = 2;
    p.override_L = true;
    p.truncate_forest = true;
    it = cache.emplace(h, build_five_regular(p)).first;
  }
  return it->second;
}

}  // namespace

static void BM_WalkStep(benchmark::State& state) {
  const auto& g = five_h2();
  WalkOperator op(g, 0, static_cast<int>(state.range(0)));
  DistVector p(g.vertex_count(), 1.0 / g.vertex_count());
  DistVector q;
  for (auto _ : state) {
    op.apply(p, q);
    std::swap(p, q);
    benchmark::DoNotOptimize(p.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()) * 2);
}
BENCHMARK(BM_WalkStep)->Arg(1)->Arg(4);

static void BM_HittingSample(benchmark::State& state) {
  const auto& g = five_truncated(static_cast<int>(state.range(0)));
  std::uint64_t stream = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_hitting_time(g, 0, 1, stream++));
}
BENCHMARK(BM_HittingSample)->Arg(2)->Arg(4);

static void BM_LanczosRandomRegular(benchmark::State& state) {
  const auto g = random_regular_graph(4, static_cast<std::size_t>(state.range(0)), 3);
  EigenOptions opt;
  opt.force_iterative = true;
  for (auto _ : state) benchmark::DoNotOptimize(walk_spectrum_edges(g, opt).second);
}
BENCHMARK(BM_LanczosRandomRegular)->Arg(5000)->Arg(80000)->Unit(benchmark::kMillisecond);

static void BM_DenseSpectrum(benchmark::State& state) {
  const auto g = random_regular_graph(3, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(walk_spectrum_edges(g).second);
}
BENCHMARK(BM_DenseSpectrum)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_BuildFiveRegular(benchmark::State& state) {
  ConstructionParams p;
  p.h = static_cast<int>(state.range(0));
  p.L = 2;
  p.override_L = true;
  for (auto _ : state) benchmark::DoNotOptimize(build_five_regular(p).vertex_count());
}
BENCHMARK(BM_BuildFiveRegular)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
