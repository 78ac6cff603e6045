#include <benchmark/benchmark.h>

#include "amsg/amsg.hpp"

namespace {

  void BM_EnumerateByDegree(benchmark::State& state) {
    auto const n = static_cast<amsg::Int>(state.range(0));
    for (auto _ : state) {
      auto recs = amsg::enumerate_by_degree(n, {.threads = 1});
      benchmark::DoNotOptimize(recs.data());
    }
  }
  BENCHMARK(BM_EnumerateByDegree)->Arg(8)->Arg(24)->Arg(36)
      ->Unit(benchmark::kMillisecond);

  void BM_EnumerateByConductor(benchmark::State& state) {
    auto const c = static_cast<amsg::Int>(state.range(0));
    for (auto _ : state) {
      auto found = amsg::enumerate_by_conductor(c);
      benchmark::DoNotOptimize(found.size());
    }
  }
  BENCHMARK(BM_EnumerateByConductor)->Arg(18)->Arg(60)->Arg(120)
      ->Unit(benchmark::kMillisecond);

  void BM_ConductorOracle(benchmark::State& state) {
    auto const s = amsg::generated_semigroup(
        amsg::validate({48, 32, 104, 211}));
    for (auto _ : state) {
      benchmark::DoNotOptimize(amsg::conductor_oracle(s));
    }
  }
  BENCHMARK(BM_ConductorOracle);

  void BM_ConductorFormula(benchmark::State& state) {
    auto const cs = amsg::validate({48, 32, 104, 211});
    for (auto _ : state) {
      benchmark::DoNotOptimize(amsg::conductor_formula(cs));
    }
  }
  BENCHMARK(BM_ConductorFormula);

  // every admissible conductor of one even degree
  void BM_ConstructSweep(benchmark::State& state) {
    auto const n     = static_cast<amsg::Int>(state.range(0));
    auto const range = amsg::conductor_range(n);
    for (auto _ : state) {
      for (amsg::Int c : range) {
        auto built = amsg::construct_for_conductor(n, c);
        benchmark::DoNotOptimize(built.sequence.degree());
      }
    }
    state.SetItemsProcessed(state.iterations()
                            * static_cast<std::int64_t>(range.size()));
  }
  BENCHMARK(BM_ConstructSweep)->Arg(30)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
