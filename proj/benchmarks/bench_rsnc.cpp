#include <benchmark/benchmark.h>

#include "rsnc/baselines.hpp"
#include "rsnc/clique.hpp"
#include "rsnc/harness.hpp"
#include "rsnc/oracle.hpp"

namespace {

rsnc::Scenario make_scenario(int n, int m, std::uint64_t seed) {
  rsnc::GenConfig config;
  config.n = n;
  config.m = m;
  config.seed = seed;
  return rsnc::generate_scenario(config);
}

void BM_build_graph(benchmark::State& state) {
  const auto s = make_scenario(10, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsnc::build_graph(s));
  }
}
BENCHMARK(BM_build_graph)->Arg(10)->Arg(20)->Arg(40);

void BM_max_weight_clique(benchmark::State& state) {
  const auto s = make_scenario(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)), 11);
  const auto g = rsnc::build_graph(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsnc::max_weight_clique(g));
  }
  state.SetLabel(std::to_string(g.size()) + " vertices");
}
BENCHMARK(BM_max_weight_clique)->Arg(10)->Arg(20)->Arg(30);

void BM_run_rsnc(benchmark::State& state) {
  const auto s = make_scenario(10, static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsnc::run_rsnc(s));
  }
}
BENCHMARK(BM_run_rsnc)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_run_dsf(benchmark::State& state) {
  const auto s = make_scenario(10, static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsnc::run_dsf(s));
  }
}
BENCHMARK(BM_run_dsf)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_oracle(benchmark::State& state) {
  // Small instances only: the search is exponential by design.
  rsnc::GenConfig config;
  config.n = 4;
  config.m = 4;
  std::uint64_t seed = 0;
  rsnc::Scenario s;
  for (;;) {
    config.seed = ++seed;
    s = rsnc::generate_scenario(config);
    if (rsnc::build_graph(s).size() <= 8) break;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsnc::optimal_schedule(s));
  }
  state.SetLabel("schedules scored: " +
                 std::to_string(rsnc::optimal_schedule(s).schedules_explored));
}
BENCHMARK(BM_oracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
