#include <benchmark/benchmark.h>

#include "vgsb/basis.hpp"
#include "vgsb/builtins.hpp"
#include "vgsb/conformal.hpp"
#include "vgsb/envelope.hpp"
#include "vgsb/forks.hpp"
#include "vgsb/reducer.hpp"

using namespace vgsb;

static void BM_WeylReduce(benchmark::State& state) {
  RuleSystem sys = weyl_system();
  int n = static_cast<int>(state.range(0));
  std::vector<Letter> l;
  for (int i = 0; i < n; ++i) {
    l.push_back(Letter::mode_of(i % 2 == 0 ? 1 : 0, 2 - i));
  }
  LinComb w(Word(l, true));
  for (auto _ : state) {
    Reducer red(sys, 10000000);
    benchmark::DoNotOptimize(red.reduce(w));
  }
}
BENCHMARK(BM_WeylReduce)->Arg(4)->Arg(6)->Arg(8);

static void BM_WeylForks(benchmark::State& state) {
  RuleSystem sys = weyl_system();
  ForkOptions fo;
  fo.window = static_cast<int>(state.range(0));
  fo.max_tail = 1;
  auto forks = enumerate_forks(sys, fo);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_forks(sys, forks, sys.fuel, 1));
  }
  state.counters["forks"] = static_cast<double>(forks.size());
}
BENCHMARK(BM_WeylForks)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_VirasoroBasis(benchmark::State& state) {
  RuleSystem sys = envelope_pbw_system(virasoro());
  Rational w(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_terminal_words(sys, w, 8, 12));
  }
}
BENCHMARK(BM_VirasoroBasis)->Arg(4)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
