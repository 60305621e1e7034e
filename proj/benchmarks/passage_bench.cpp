#include "twopile/first_passage.hpp"
#include "twopile/series.hpp"
#include "twopile/simulator.hpp"

#include <benchmark/benchmark.h>

using namespace twopile;

namespace {

void BM_ExactTable(benchmark::State& state) {
  const GameSpec spec{MoveSet{-1, 2}, 5};
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_passage_table(spec, K));
  state.SetComplexityN(K);
}
BENCHMARK(BM_ExactTable)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_CurveExtend(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PassageCurve c{GameSpec{MoveSet{-1, 1}, 3}};
    c.extend_to(K);
    benchmark::DoNotOptimize(c.q(K));
  }
}
BENCHMARK(BM_CurveExtend)->Arg(10'000)->Arg(50'000)->Unit(benchmark::kMillisecond);

void BM_P1ZeroDrift(benchmark::State& state) {
  const TailPolicy p = TailPolicy::for_moves(MoveSet{-1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(p_n_theorem1(GameSpec{MoveSet{-1, 1}, 1}, p));
}
BENCHMARK(BM_P1ZeroDrift)->Unit(benchmark::kMillisecond);

void BM_PnMinus1Plus2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TailPolicy p = TailPolicy::for_moves(MoveSet{-1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(p_n_theorem1(GameSpec{MoveSet{-1, 2}, n}, p));
}
BENCHMARK(BM_PnMinus1Plus2)->Arg(1)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  SimConfig cfg;
  cfg.moves = MoveSet{-1, 2};
  cfg.trials = static_cast<std::uint64_t>(state.range(0));
  cfg.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(cfg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * state.range(0)));
}
BENCHMARK(BM_Simulate)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
