#include <benchmark/benchmark.h>

#include "frege/modified.hpp"
#include "frege/original.hpp"

namespace {

using namespace frege;

Profile table1_profile() { return Profile::fixed(Round{{BigInt(5), BigInt(3), BigInt(2)}}); }

void BM_OriginalStep(benchmark::State& state) {
  const Profile profile = table1_profile();
  const Round& round = profile.round(1);
  OriginalState st = initial_original_state(round);
  for (auto _ : state) {
    advance_original(st, round);
    benchmark::DoNotOptimize(st.sigma.data());
  }
}
BENCHMARK(BM_OriginalStep);

void BM_ModifiedStep(benchmark::State& state) {
  const Profile profile = table1_profile();
  const auto shares = profile.normalized(1);
  ModifiedState st = initial_modified_state(shares);
  for (auto _ : state) {
    advance_modified(st, shares);
    benchmark::DoNotOptimize(st.scores.data());
  }
}
BENCHMARK(BM_ModifiedStep);

void BM_RunOriginal(benchmark::State& state) {
  const Profile profile = table1_profile();
  const auto horizon = state.range(0);
  for (auto _ : state) {
    OriginalTrace trace = run_original(profile, horizon);
    benchmark::DoNotOptimize(trace.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_RunOriginal)->Arg(100)->Arg(10000);

void BM_CostStabilization(benchmark::State& state) {
  for (auto _ : state) {
    auto t0 = cost_stabilization_time(BigInt(state.range(0)), 25);
    benchmark::DoNotOptimize(t0);
  }
}
BENCHMARK(BM_CostStabilization)->Arg(1000)->Arg(1000000);

void BM_DetectCycle(benchmark::State& state) {
  const Profile profile = table1_profile();
  for (auto _ : state) {
    CycleInfo info = detect_cycle(profile);
    benchmark::DoNotOptimize(info.period);
  }
}
BENCHMARK(BM_DetectCycle);

} // namespace
