#include <benchmark/benchmark.h>

#include <random>

#include "bellforge/functional.hpp"
#include "bellforge/local_bound.hpp"
#include "bellforge/polyhedra.hpp"
#include "bellforge/quantum.hpp"

using namespace bellforge;

namespace {

BellFunctional random_functional(std::size_t n_a, std::size_t n_b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(n_a, n_b);
  for (double& v : m.data()) v = -1.0 + 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  return {std::move(m), "bench"};
}

void BM_GraycodeWalk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BellFunctional f = random_functional(n, 30, 1234);
  BoundOptions opts{34, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_bound_graycode(f, opts).value);
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << (n - 1)));
}
BENCHMARK(BM_GraycodeWalk)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ReferenceBound(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BellFunctional f = random_functional(n, 12, 99);
  BoundOptions opts{34, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_bound(f, opts).value);
  }
}
BENCHMARK(BM_ReferenceBound)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BuckyballOracle(benchmark::State& state) {
  const VertexSet b30 = antipodal_reduce(truncated_icosahedron());
  const BellFunctional f = dot_functional(b30, b30);
  BoundOptions opts{34, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_bound_graycode(f, opts).value);
  }
}
BENCHMARK(BM_BuckyballOracle)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

void BM_SeeSaw(benchmark::State& state) {
  const BellFunctional f = load_appendix_matrix();
  SeeSawOptions opts;
  opts.dim = 3;
  opts.restarts = static_cast<int>(state.range(0));
  opts.deterministic_start = false;  // keep the oracle out of the timing
  for (auto _ : state) {
    benchmark::DoNotOptimize(seesaw_max(f, opts).value);
  }
}
BENCHMARK(BM_SeeSaw)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
