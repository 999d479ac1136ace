#include <benchmark/benchmark.h>

#include <random>

#include "qdet/linalg.hpp"
#include "qdet/ntheory.hpp"
#include "qdet/qmatrix.hpp"
#include "qdet/verify.hpp"

namespace {

void BM_BuildFloorQInt(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    auto m = qdet::build_laurent({qdet::MatrixKind::FloorQInt, 3, n});
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_BuildFloorQInt)->Arg(9)->Arg(15)->Arg(25);

void BM_DetBareissFloorQInt(benchmark::State& state) {
  const long long n = state.range(0);
  auto m = qdet::build_laurent({qdet::MatrixKind::FloorQInt, 3, n});
  for (auto _ : state) {
    auto det = qdet::det_bareiss(m);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(BM_DetBareissFloorQInt)->Arg(5)->Arg(9)->Arg(15)->Arg(21)->Arg(25);

void BM_DetBareissXShifted(benchmark::State& state) {
  const long long n = state.range(0);
  auto m = qdet::build_x({qdet::MatrixKind::FloorX, 2, n});
  for (auto _ : state) {
    auto det = qdet::det_bareiss(m);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(BM_DetBareissXShifted)->Arg(5)->Arg(9)->Arg(13);

void BM_AdjugatePowerMatrix(benchmark::State& state) {
  const long long n = state.range(0);
  auto m = qdet::build_laurent({qdet::MatrixKind::FloorPower, 1, n});
  for (auto _ : state) {
    auto adj = qdet::adjugate(m);
    benchmark::DoNotOptimize(adj);
  }
}
BENCHMARK(BM_AdjugatePowerMatrix)->Arg(5)->Arg(11)->Arg(21);

void BM_Jacobi(benchmark::State& state) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> mdist(-100000, 100000);
  std::uniform_int_distribution<long long> ndist(0, 50000);
  for (auto _ : state) {
    int j = qdet::jacobi(mdist(rng), 2 * ndist(rng) + 1);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_Jacobi);

void BM_PermSign(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    int s = qdet::perm_sign(2, n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_PermSign)->Arg(99)->Arg(9999);

void BM_VerifyFloorTheorem(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) {
    auto r = qdet::verify_floor_theorem(3, n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyFloorTheorem)->Arg(9)->Arg(17)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
