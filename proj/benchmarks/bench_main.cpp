#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "fairdiv/fairness.hpp"
#include "fairdiv/lemmas.hpp"
#include "fairdiv/polytope.hpp"
#include "fairdiv/rules.hpp"

namespace {

using namespace fairdiv;

Instance agree_instance(int n, int m, int k) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  std::vector<int> ranking(static_cast<std::size_t>(k));
  std::iota(ranking.begin(), ranking.end(), 0);
  inst.rankings.assign(static_cast<std::size_t>(n), ranking);
  return inst;
}

void BM_mms_value(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1234);
  std::vector<long long> w(static_cast<std::size_t>(m));
  long long total = 0;
  for (auto& x : w) {
    x = 1 + static_cast<long long>(rng() % 50);
    total += x;
  }
  ValuationProfile v;
  v.values.emplace_back();
  for (long long x : w) v.values[0].emplace_back(x, total);

  for (auto _ : state) {
    benchmark::DoNotOptimize(mms_value(0, v, n));
  }
}
BENCHMARK(BM_mms_value)->Args({10, 3})->Args({12, 4});

void BM_edf_schedule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const DeadlinePairSet pairs = mms_deadline_pairs(n, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edf_schedule(pairs, m));
  }
}
BENCHMARK(BM_edf_schedule)->Args({10, 500})->Args({50, 5000});

void BM_deadline_pair_generation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mms_deadline_pairs(n, m));
  }
}
BENCHMARK(BM_deadline_pair_generation)->Args({10, 500})->Args({50, 5000});

void BM_lemma_verification(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const long long d_max = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_deadline_inequality(n_max, d_max));
  }
}
BENCHMARK(BM_lemma_verification)->Args({10, 500})->Args({50, 5000})->Unit(benchmark::kMillisecond);

void BM_bundle_value_bounds(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int k = m / 2;
  const Instance inst = agree_instance(1, m, k);
  const ConsistentPolytope p = agent_polytope(inst, 0);
  std::vector<int> bundle;
  for (int g = 0; g < m; g += 2) bundle.push_back(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bundle_value_bounds(p, bundle));
  }
}
BENCHMARK(BM_bundle_value_bounds)->Arg(16)->Arg(64)->Arg(256);

void BM_necessary_ef1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Instance inst = agree_instance(n, m, ef1_threshold(n, m));
  const Allocation a = ef1_rule(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(necessary_ef1(a, inst));
  }
}
BENCHMARK(BM_necessary_ef1)->Args({4, 16})->Args({6, 30});

void BM_ef1_rule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Instance inst = agree_instance(n, m, ef1_threshold(n, m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ef1_rule(inst));
  }
}
BENCHMARK(BM_ef1_rule)->Args({4, 40})->Args({8, 200});

}  // namespace

BENCHMARK_MAIN();
