#include <benchmark/benchmark.h>

#include "bookfree/canonical.hpp"
#include "bookfree/families.hpp"
#include "bookfree/search.hpp"

namespace {

using namespace bookfree;

void BM_EnumerateAll(benchmark::State& state) {
  Constraint c;
  c.order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(c, [](const Graph&) {}));
}
BENCHMARK(BM_EnumerateAll)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_EnumerateBookFree(benchmark::State& state) {
  Constraint c;
  c.order = static_cast<int>(state.range(0));
  c.book_bound = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(c, [](const Graph&) {}));
}
BENCHMARK(BM_EnumerateBookFree)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = make_book_extremal(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_graph6(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(9)->Arg(13)->Arg(16);

}  // namespace
