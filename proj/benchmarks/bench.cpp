#include <benchmark/benchmark.h>

#include "planch/degrees.hpp"
#include "planch/density.hpp"
#include "planch/groupdata.hpp"
#include "planch/qhalfpoly.hpp"
#include "planch/verify.hpp"

using namespace planch;

namespace {

QHalfPoly dense_poly(int terms, int seed) {
  QHalfPoly p;
  for (int i = 0; i < terms; ++i)
    p.add_term(BigRat((seed + 7 * i) % 23 - 11, 1 + (i % 5)), i);
  return p;
}

void bm_poly_multiply(benchmark::State& state) {
  QHalfPoly a = dense_poly(static_cast<int>(state.range(0)), 3);
  QHalfPoly b = dense_poly(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_multiply)->Arg(16)->Arg(64)->Arg(256);

void bm_qratio_reduce(benchmark::State& state) {
  QHalfPoly num = gl_order(static_cast<int>(state.range(0)));
  QHalfPoly den = poincare_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(QRatio(num, den));
}
BENCHMARK(bm_qratio_reduce)->Arg(4)->Arg(8);

void bm_gamma_factor(benchmark::State& state) {
  std::vector<int> blocks(static_cast<std::size_t>(state.range(0)), 1);
  LeviShape shape(blocks);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_factor(shape));
}
BENCHMARK(bm_gamma_factor)->Arg(4)->Arg(8);

void bm_fd_ratio(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fd_ratio(4, static_cast<int>(state.range(0)), 2, 10));
}
BENCHMARK(bm_fd_ratio)->Arg(2)->Arg(4)->Arg(8);

void bm_density_assembly(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  ComponentSpec spec = iwahori_component(e, 2, Partition(std::vector<int>(e, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(density(spec));
}
BENCHMARK(bm_density_assembly)->Arg(4)->Arg(8);

void bm_integrate_gl2(benchmark::State& state) {
  ComponentSpec spec = iwahori_component(2, 3, Partition({1, 1}));
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate(spec, 3.0, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_integrate_gl2)->Arg(64)->Arg(256);

void bm_verify_poincare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("poincare"));
}
BENCHMARK(bm_verify_poincare);

}  // namespace

BENCHMARK_MAIN();
