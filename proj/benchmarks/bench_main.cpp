#include <benchmark/benchmark.h>

#include "subshift/bratteli.hpp"
#include "subshift/contexts.hpp"
#include "subshift/int_matrix.hpp"
#include "subshift/ktheory.hpp"
#include "subshift/spectra.hpp"
#include "subshift/zoo.hpp"

using namespace subshift;

static void BM_EnumerateLanguageEven(benchmark::State& state) {
  auto p = zoo::even_shift().presentation;
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_language(p, n));
  }
}
BENCHMARK(BM_EnumerateLanguageEven)->Arg(8)->Arg(12)->Arg(16);

static void BM_ClassifyAllEven(benchmark::State& state) {
  auto p = zoo::even_shift().presentation;
  auto const n = static_cast<std::size_t>(state.range(0));
  auto words = enumerate_language(p, n).words;
  for (auto _ : state) {
    auto oracle = make_oracle(p, n);
    std::size_t sync = 0;
    for (auto const& w : words) {
      sync += oracle->synchronizing(w).synchronizing;
    }
    benchmark::DoNotOptimize(sync);
  }
}
BENCHMARK(BM_ClassifyAllEven)->Arg(6)->Arg(10);

static void BM_BuildBlcGicar(benchmark::State& state) {
  auto p = zoo::gicar().presentation;
  auto const depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_blc(p, depth));
  }
}
BENCHMARK(BM_BuildBlcGicar)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BuildBlcAnbn(benchmark::State& state) {
  auto p = zoo::anbn().presentation;
  auto const depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_blc(p, depth));
  }
}
BENCHMARK(BM_BuildBlcAnbn)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  auto m = family_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_PerronFamily(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(perron_family(n));
  }
}
BENCHMARK(BM_PerronFamily)->Arg(1)->Arg(10)->Arg(100);

static void BM_PerronPower(benchmark::State& state) {
  auto m = family_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(perron_power(m, Rational(1, 1000000)));
  }
}
BENCHMARK(BM_PerronPower)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
