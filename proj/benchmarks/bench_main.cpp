#include <benchmark/benchmark.h>

#include "zeroheavy/cantor.hpp"
#include "zeroheavy/digits.hpp"
#include "zeroheavy/expr.hpp"
#include "zeroheavy/hausdorff.hpp"
#include "zeroheavy/oracle.hpp"
#include "zeroheavy/zigzag.hpp"

using namespace zeroheavy;

static void BM_Expand(benchmark::State& state) {
  const Rational q(355, 113 * 4);
  for (auto _ : state) benchmark::DoNotOptimize(expand(q, 10, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Expand)->Arg(256)->Arg(4096);

static void BM_EvalEnclosure(benchmark::State& state) {
  FunctionSpec f = parse("exp(x)*sin(x)+x^3");
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_enclosure(f, Rational(1, 3), static_cast<unsigned>(state.range(0)), 10));
}
BENCHMARK(BM_EvalEnclosure)->Arg(50)->Arg(500);

static void BM_RunSingle(benchmark::State& state) {
  FunctionSpec f = parse("exp(x)");
  Interval I(Rational(1, 4), Rational(3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(run_single(f, I, 10, 200, 256, {}));
}
BENCHMARK(BM_RunSingle)->Unit(benchmark::kMillisecond);

static void BM_CHat(benchmark::State& state) {
  TernaryDigits x = TernaryDigits::periodic(parse_ternary_word("0210"), parse_ternary_word("1022"));
  for (auto _ : state) benchmark::DoNotOptimize(c_hat(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CHat)->Arg(3)->Arg(8);

static void BM_CountOmega(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_omega(10, static_cast<std::size_t>(state.range(0)), Rational(1, 4)));
}
BENCHMARK(BM_CountOmega)->Arg(64)->Arg(1024);
BENCHMARK_MAIN();
