#include <benchmark/benchmark.h>

#include <random>

#include "matcharr/awp.hpp"
#include "matcharr/satreduce.hpp"

using namespace matcharr;

static void BM_Keygen(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  std::uint64_t bound = 2;
  for (unsigned i = 0; i + 1 < m; ++i) bound *= 3;
  const std::uint64_t p = next_prime_at_least(bound + 1);
  std::mt19937_64 seeds(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(keygen(m, p, seeds()));
  }
}
BENCHMARK(BM_Keygen)->Arg(4)->Arg(8);

static void BM_SolveEasy(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  std::uint64_t bound = 2;
  for (unsigned i = 0; i + 1 < m; ++i) bound *= 3;
  const std::uint64_t p = next_prime_at_least(bound + 1);
  const EasyInstance inst = easy_weights(m, p);
  std::mt19937_64 rng(2);
  std::vector<FpVector> targets;
  for (int i = 0; i < 64; ++i) {
    FpVector t{p, {}};
    for (unsigned c = 0; c < m; ++c) t.entries.push_back(uniform_below(rng, p));
    targets.push_back(t);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_easy_awp(targets[i++ % targets.size()], inst));
  }
}
BENCHMARK(BM_SolveEasy)->Arg(4)->Arg(8);

static void BM_CanonicalSearch(benchmark::State& state) {
  Cnf3 cnf = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  const ReductionInstance inst = build_reduction(cnf, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(improper_canonical_search(inst));
  }
}
BENCHMARK(BM_CanonicalSearch);

static void BM_ClassifyReduced(benchmark::State& state) {
  Cnf3 cnf = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  const ReductionInstance inst = build_reduction(cnf, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_weight_function(inst.graph, inst.weights));
  }
}
BENCHMARK(BM_ClassifyReduced);

BENCHMARK_MAIN();
