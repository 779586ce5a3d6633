#include <benchmark/benchmark.h>

#include "eulerdec/classical.hpp"
#include "eulerdec/decompose.hpp"
#include "eulerdec/diophantine.hpp"
#include "eulerdec/structure.hpp"

namespace {

using namespace eulerdec;

// Fresh table per iteration so the recurrence itself is timed.
void BM_EulerPolyCold(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    EulerTable table;
    benchmark::DoNotOptimize(table.poly(k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EulerPolyCold)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_AllDecompositionsEven(benchmark::State& state) {
  const Poly e = euler_poly(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_decompositions(e));
}
BENCHMARK(BM_AllDecompositionsEven)->Arg(12)->Arg(24)->Arg(48)->Arg(96);

void BM_IsIndecomposableOdd(benchmark::State& state) {
  const Poly e = euler_poly(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_indecomposable(e));
}
BENCHMARK(BM_IsIndecomposableOdd)->Arg(25)->Arg(63)->Arg(105);

void BM_SquareFree(benchmark::State& state) {
  const Poly e = euler_poly(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_simple_roots(e + Poly::constant(1)));
}
BENCHMARK(BM_SquareFree)->Arg(10)->Arg(20)->Arg(40);

void BM_AltSumClosed(benchmark::State& state) {
  const mpz_class n(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alt_power_sum_closed(8, n));
}
BENCHMARK(BM_AltSumClosed)->Arg(100)->Arg(1'000'000);

void BM_FamilyCaseIV(benchmark::State& state) {
  for (auto _ : state) {
    auto fam = family_case_iv(8, 5, Branch::OddN);
    benchmark::DoNotOptimize(fam.take(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FamilyCaseIV)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
