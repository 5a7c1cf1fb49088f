#include <benchmark/benchmark.h>

#include "bookfree/families.hpp"
#include "bookfree/invariants.hpp"
#include "bookfree/quintic.hpp"
#include "bookfree/spectral.hpp"

namespace {

using namespace bookfree;

void BM_PerronBookExtremal(benchmark::State& state) {
  const Graph g = make_book_extremal(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(perron(g).rho);
}
BENCHMARK(BM_PerronBookExtremal)->Arg(48)->Arg(100)->Arg(200)->Arg(500);

void BM_QuinticRoot(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const QuinticPoly f = book_quintic((n - 1) / 2, n / 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(largest_root(f).root);
}
BENCHMARK(BM_QuinticRoot)->Arg(48)->Arg(500);

void BM_Booksize(benchmark::State& state) {
  const Graph g = make_book_extremal(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(booksize(g));
}
BENCHMARK(BM_Booksize)->Arg(100)->Arg(500);

void BM_MatchingNumber(benchmark::State& state) {
  const Graph g = make_book_extremal(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(g));
}
BENCHMARK(BM_MatchingNumber)->Arg(100)->Arg(500);

}  // namespace
