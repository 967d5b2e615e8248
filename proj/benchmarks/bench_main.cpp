#include <benchmark/benchmark.h>

#include "adrank/asr.hpp"
#include "adrank/baselines.hpp"
#include "adrank/datasets.hpp"
#include "adrank/exact.hpp"
#include "adrank/experiments.hpp"
#include "adrank/policy.hpp"
#include "adrank/rng.hpp"
#include "adrank/state.hpp"

using namespace adrank;

namespace {

Instance synthetic(int k) { return gen_syn(SynParams{k, -1.0}); }

Instance random_coverage(int max_n, int max_m, int trial) {
  Rng rng = make_rng(99, "bench", trial);
  RandomInstanceParams params;
  params.max_n = max_n;
  params.max_m = max_m;
  return random_instance(rng, params, trial);
}

void bm_score_candidates(benchmark::State& state) {
  Instance inst = synthetic(static_cast<int>(state.range(0)));
  AlgoState root = make_root_state(inst);
  for (auto _ : state)
    benchmark::DoNotOptimize(score_candidates(root, inst));
  state.SetItemsProcessed(state.iterations() * inst.num_elements());
}
BENCHMARK(bm_score_candidates)->Arg(50)->Arg(250);

void bm_advance_state(benchmark::State& state) {
  Instance inst = synthetic(static_cast<int>(state.range(0)));
  AlgoState root = make_root_state(inst);
  int e = select_next(root, inst);
  for (auto _ : state)
    benchmark::DoNotOptimize(advance_state(root, e, inst));
}
BENCHMARK(bm_advance_state)->Arg(50)->Arg(250);

void bm_build_policy_synthetic(benchmark::State& state) {
  Instance inst = synthetic(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_policy(inst).expected_cost);
}
BENCHMARK(bm_build_policy_synthetic)->Arg(50)->Arg(150)->Arg(250);

void bm_generate_synthetic(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(synthetic(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_generate_synthetic)->Arg(250);

void bm_static_rank(benchmark::State& state) {
  Instance inst = synthetic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(static_rank(inst));
}
BENCHMARK(bm_static_rank)->Arg(50)->Arg(250);

void bm_kmeans_cluster(benchmark::State& state) {
  Instance inst = synthetic(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kmeans_cluster(inst, 10, 7));
}
BENCHMARK(bm_kmeans_cluster)->Arg(50)->Arg(250);

void bm_exact_opt(benchmark::State& state) {
  Instance inst = random_coverage(static_cast<int>(state.range(0)), 4, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_opt_oracle(inst).value);
}
BENCHMARK(bm_exact_opt)->Arg(5)->Arg(6);

void bm_oracle_compare(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_compare(5, 4, 20, 42).max_ratio);
}
BENCHMARK(bm_oracle_compare);

}  // namespace

BENCHMARK_MAIN();
