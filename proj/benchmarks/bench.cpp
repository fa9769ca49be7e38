#include <benchmark/benchmark.h>

#include "ipsat/construction.hpp"
#include "ipsat/verify.hpp"

namespace {

void BM_BuildFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ipsat::build_saturated_family(n, 2, 2));
  }
}
BENCHMARK(BM_BuildFamily)->Arg(7)->Arg(10)->Arg(14);

void BM_Detector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ipsat::Construction con = ipsat::build_saturated_family(n, 2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ipsat::find_induced_kst(con.family, 2, 2));
  }
}
BENCHMARK(BM_Detector)->Arg(7)->Arg(10);

void BM_SaturationCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ipsat::Construction con = ipsat::build_saturated_family(n, 2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ipsat::check_saturated(con.family, 2, 2));
  }
}
BENCHMARK(BM_SaturationCheck)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
