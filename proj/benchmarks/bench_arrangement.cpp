#include <benchmark/benchmark.h>

#include <cmath>

#include "matcharr/arrangement.hpp"
#include "matcharr/poset.hpp"
#include "matcharr/weightfn.hpp"

using namespace matcharr;

static void BM_EnumerateAltSeqs(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto seqs = enumerate_alt_seqs(g);
    benchmark::DoNotOptimize(seqs);
  }
}
BENCHMARK(BM_EnumerateAltSeqs)->Arg(4)->Arg(5);

static void BM_CountProperPoints(benchmark::State& state) {
  const Arrangement a =
      build_matching_arrangement(cycle_graph(static_cast<unsigned>(state.range(0))));
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_proper_points(a, p, 1));
  }
  state.counters["points"] = static_cast<double>(std::pow(double(p), double(a.dimension)));
}
BENCHMARK(BM_CountProperPoints)->Args({4, 23})->Args({5, 23})->Args({6, 23});

static void BM_CharpolyFiniteField(benchmark::State& state) {
  const Arrangement a =
      build_matching_arrangement(cycle_graph(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(charpoly_finite_field(a, 5, 1));
  }
}
BENCHMARK(BM_CharpolyFiniteField)->Arg(4)->Arg(5);

static void BM_CharpolyPoset(benchmark::State& state) {
  const Arrangement a =
      build_matching_arrangement(cycle_graph(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(charpoly_poset(a));
  }
}
BENCHMARK(BM_CharpolyPoset)->Arg(4)->Arg(5);

static void BM_CountProperFunctions(benchmark::State& state) {
  const Graph g = cycle_graph(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_proper_functions(g, 5, 2));
  }
}
BENCHMARK(BM_CountProperFunctions);
