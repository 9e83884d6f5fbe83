#include <benchmark/benchmark.h>

#include "frege/apportionment.hpp"
#include "frege/bias.hpp"

namespace {

using namespace frege;

ApportionmentProblem paper_problem() {
  return ApportionmentProblem::from_votes(
      {BigInt(79), BigInt(7), BigInt(6), BigInt(3), BigInt(2), BigInt(1)}, 20);
}

ApportionmentProblem bias_scale_problem() {
  BiasConfig config;
  return sample_instance(42, 0, config); // 5 parties, k=100
}

void BM_Apportion(benchmark::State& state) {
  const auto method = static_cast<Method>(state.range(0));
  const ApportionmentProblem problem = bias_scale_problem();
  for (auto _ : state) {
    Seats seats = apportion(method, problem);
    benchmark::DoNotOptimize(seats.data());
  }
}
BENCHMARK(BM_Apportion)->DenseRange(0, 6)->ArgNames({"method"});

void BM_CompareAll(benchmark::State& state) {
  const ApportionmentProblem problem = paper_problem();
  for (auto _ : state) {
    auto table = compare_all(problem);
    benchmark::DoNotOptimize(table.data());
  }
}
BENCHMARK(BM_CompareAll);

void BM_BiasInstance(benchmark::State& state) {
  BiasConfig config;
  config.seed = 7;
  std::int64_t index = 0;
  for (auto _ : state) {
    const ApportionmentProblem problem = sample_instance(config.seed, index++, config);
    for (Method m : kAllMethods) {
      Seats seats = apportion(m, problem);
      auto f = smaller_party_favored(problem, seats);
      benchmark::DoNotOptimize(f);
    }
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BiasInstance);

} // namespace
