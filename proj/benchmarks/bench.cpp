#include <benchmark/benchmark.h>

#include "progfree/lift.hpp"
#include "progfree/reduce.hpp"
#include "progfree/search.hpp"

using namespace progfree;

static void BM_PreimageCount(benchmark::State& state) {
  const auto m = static_cast<std::int32_t>(state.range(0));
  Rational ab(1, 48LL * m);
  for (auto _ : state) benchmark::DoNotOptimize(preimage_count(m, ab, ab));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m) * m);
}
BENCHMARK(BM_PreimageCount)->Arg(12)->Arg(40)->Arg(100)->Arg(400);

static void BM_GreedyPeel(benchmark::State& state) {
  const auto m = static_cast<std::int32_t>(state.range(0));
  Rational ab(1, 48LL * m);
  auto s = region_preimage(m, ab, ab);
  for (auto _ : state) {
    auto cert = greedy_peel(s, PeelStrategy::Lexicographic);
    benchmark::DoNotOptimize(cert);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_GreedyPeel)->Arg(12)->Arg(24)->Arg(40);

// Scans a progression-free lifted set, so the pair scan always runs to
// completion (box sets would terminate at the first witness).
static void BM_ProgressionScan(benchmark::State& state) {
  LiftSpec spec;
  spec.block = SiteSet::from_coords(2, 2, {{0, 1}, {1, 0}});
  spec.repetitions = static_cast<int>(state.range(0));
  auto s = enumerate_lift(spec);
  for (auto _ : state) benchmark::DoNotOptimize(find_three_term_progression(s));
  auto n = static_cast<std::int64_t>(s.size());
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ProgressionScan)->Arg(2)->Arg(4)->Arg(6);

static void BM_GridSearch(benchmark::State& state) {
  const auto m = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) {
    auto r = grid_search_alpha_beta(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GridSearch)->Arg(12)->Arg(25)->Arg(40);

BENCHMARK_MAIN();
