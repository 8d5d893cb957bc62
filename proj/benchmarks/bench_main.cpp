#include <benchmark/benchmark.h>

#include <cstdint>

#include "moddev/concentration.hpp"
#include "moddev/exact_oracle.hpp"
#include "moddev/hypotest.hpp"
#include "moddev/llr.hpp"
#include "moddev/montecarlo.hpp"
#include "moddev/pmf.hpp"

namespace {

using namespace moddev;

HypothesisPair binary_pair() {
  return {Pmf({0.5, 0.5}), Pmf({0.25, 0.75}), 0.5, 0.5};
}

HypothesisPair ternary_pair() {
  return {Pmf({0.5, 0.3, 0.2}), Pmf({0.2, 0.3, 0.5}), 0.5, 0.5};
}

void BM_RefinedBound(benchmark::State& state) {
  const RefinedParams params(0.5493061443340548, 0.3017372402031455, 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(refined_bound(1000, params, true));
  }
}
BENCHMARK(BM_RefinedBound);

void BM_LlrDistributionBinary(benchmark::State& state) {
  const HypothesisPair pair = binary_pair();
  const LlrProfile prof = llr_profile(pair);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(llr_distribution(pair, prof, n, Hypothesis::H1));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_LlrDistributionBinary)->Arg(100)->Arg(1000)->Arg(10000)->Complexity();

void BM_LlrDistributionTernary(benchmark::State& state) {
  const HypothesisPair pair = ternary_pair();
  const LlrProfile prof = llr_profile(pair);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(llr_distribution(pair, prof, n, Hypothesis::H1));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_LlrDistributionTernary)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_ExactTail(benchmark::State& state) {
  const HypothesisPair pair = binary_pair();
  const LlrProfile prof = llr_profile(pair);
  const std::int64_t n = state.range(0);
  const TailDistribution dist = llr_distribution(pair, prof, n, Hypothesis::H1);
  const double threshold =
      static_cast<double>(n) * moderate_hi(ModeratePolicy{0.75, 0.1, 0.1}, prof.d12, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_tail(dist, TailKind::LeqThreshold, threshold));
  }
}
BENCHMARK(BM_ExactTail)->Arg(1000)->Arg(10000);

void BM_EstimateTail(benchmark::State& state) {
  const HypothesisPair pair = binary_pair();
  const LlrProfile prof = llr_profile(pair);
  const std::int64_t n = 100;
  const double threshold =
      static_cast<double>(n) * moderate_hi(ModeratePolicy{0.75, 0.7, 0.7}, prof.d12, n);
  McConfig cfg;
  cfg.samples = state.range(0);
  cfg.seed = 7;
  cfg.tilt = TiltSpec::automatic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_tail(pair, prof, Hypothesis::H1, n, TailKind::LeqThreshold, threshold, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.samples * n);
}
BENCHMARK(BM_EstimateTail)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
