#include <benchmark/benchmark.h>

#include "greenosher/dilation.hpp"
#include "greenosher/greenosher.hpp"
#include "greenosher/measures.hpp"
#include "greenosher/support_body.hpp"

namespace {

using namespace greenosher;

void BM_random_body(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(random_body(seed++, 6, 2.5));
}
BENCHMARK(BM_random_body);

void BM_mixed_area(benchmark::State& state) {
  SupportBody k = random_body(1, 6, 2.5);
  SupportBody l = random_body(2, 6, 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_area(k, l));
}
BENCHMARK(BM_mixed_area);

void BM_inradius(benchmark::State& state) {
  SupportBody k = random_body(3, 6, 2.5);
  SupportBody l = random_body(4, 6, 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(inradius(k, l, state.range(0)));
}
BENCHMARK(BM_inradius)->Arg(256)->Arg(1024);

void BM_to_dilation_position(benchmark::State& state) {
  SupportBody k = translate(random_body(5, 6, 2.5), {0.2, -0.1});
  SupportBody l = translate(random_body(6, 6, 2.5), {-0.15, 0.05});
  for (auto _ : state)
    benchmark::DoNotOptimize(to_dilation_position(k, l, 1024));
}
BENCHMARK(BM_to_dilation_position);

void BM_partition(benchmark::State& state) {
  SupportBody k = random_body(7, 6, 2.5);
  SupportBody l = random_body(8, 6, 2.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(partition(k, l, state.range(0)));
}
BENCHMARK(BM_partition)->Arg(1024)->Arg(1 << 14);

void BM_verify(benchmark::State& state) {
  SupportBody k = random_body(9, 6, 2.5);
  SupportBody l = random_body(10, 6, 2.5);
  DilationPlacement placed = to_dilation_position(k, l, 1024);
  std::vector<ConvexFunctional> reg = functional_registry();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        verify(placed.k, placed.l, placed.certificate, reg, 1024));
}
BENCHMARK(BM_verify);

}  // namespace

BENCHMARK_MAIN();
