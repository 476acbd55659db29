#include <benchmark/benchmark.h>

#include "enlarge/enlargeability.hpp"
#include "enlarge/fitzpatrick.hpp"
#include "enlarge/generators.hpp"

namespace {

using namespace enlarge;

template <Field F>
Operator<F> instance(std::size_t n) {
  const auto t = Operator<Rational>::linear(gen::gen_maximal_monotone(n, 7));
  if constexpr (is_exact_v<F>) return t;
  else return convert_operator<F>(t);
}

template <Field F>
PairedPoint<F> point(std::size_t n) {
  const auto p = gen::gen_point(n, 3);
  if constexpr (is_exact_v<F>) return p;
  else return convert_point<F>(p);
}

template <Field F>
void BM_FitzLinear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = instance<F>(n);
  const auto p = point<F>(n);
  for (auto _ : state) benchmark::DoNotOptimize(fitz_linear(t, p));
}

template <Field F>
void BM_FitzPrepared(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FitzpatrickFunction<F> phi(instance<F>(n));
  const auto p = point<F>(n);
  for (auto _ : state) benchmark::DoNotOptimize(phi(p));
}

template <Field F>
void BM_Vdash(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = instance<F>(n).linear_part();
  for (auto _ : state) benchmark::DoNotOptimize(vdash(s));
}

template <Field F>
void BM_Decide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = instance<F>(n);
  for (auto _ : state) benchmark::DoNotOptimize(decide_non_enlargeable(t));
}

template <Field F>
void BM_EnlargementDef(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = instance<F>(n);
  const auto p = point<F>(n);
  for (auto _ : state) benchmark::DoNotOptimize(in_enlargement_def(t, p, F(1)));
}

BENCHMARK(BM_FitzLinear<double>)->DenseRange(2, 8, 2);
BENCHMARK(BM_FitzLinear<Rational>)->DenseRange(2, 8, 2);
BENCHMARK(BM_FitzPrepared<double>)->DenseRange(2, 8, 2);
BENCHMARK(BM_FitzPrepared<Rational>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Vdash<double>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Vdash<Rational>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Decide<double>)->DenseRange(2, 8, 2);
BENCHMARK(BM_Decide<Rational>)->DenseRange(2, 8, 2);
BENCHMARK(BM_EnlargementDef<double>)->DenseRange(2, 8, 2);
BENCHMARK(BM_EnlargementDef<Rational>)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
