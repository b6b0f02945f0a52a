// Benchmarks comparing the OpenMP kernels against their serial reference
// implementations: exact dense products, row reduction, group enumeration.
#include <random>

#include "sl2p/groups.hpp"
#include "sl2p/mat.hpp"

#ifndef SL2P_NO_GBENCH
#include <benchmark/benchmark.h>

using namespace sl2p;

namespace {

Mat random_matrix(const FieldPtr& F, size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(0, F->size() - 1);
  Mat m(F, n, n);
  for (auto& e : m.entries()) e = pick(rng);
  return m;
}

void BM_mat_mul_serial(benchmark::State& state) {
  FieldPtr F = make_field(241, 1);
  Mat a = random_matrix(F, size_t(state.range(0)), 1);
  Mat b = random_matrix(F, size_t(state.range(0)), 2);
  for (auto _ : state) {
    Mat c = Mat::mul_serial(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_mat_mul_serial)->Arg(64)->Arg(128)->Arg(256);

void BM_mat_mul_parallel(benchmark::State& state) {
  FieldPtr F = make_field(241, 1);
  Mat a = random_matrix(F, size_t(state.range(0)), 1);
  Mat b = random_matrix(F, size_t(state.range(0)), 2);
  for (auto _ : state) {
    Mat c = Mat::mul(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_mat_mul_parallel)->Arg(64)->Arg(128)->Arg(256);

void BM_rref_serial(benchmark::State& state) {
  FieldPtr F = make_field(241, 1);
  Mat a = random_matrix(F, size_t(state.range(0)), 3);
  for (auto _ : state) {
    Mat c = a;
    auto piv = c.rref_in_place_serial();
    benchmark::DoNotOptimize(piv);
  }
}
BENCHMARK(BM_rref_serial)->Arg(64)->Arg(128)->Arg(256);

void BM_rref_parallel(benchmark::State& state) {
  FieldPtr F = make_field(241, 1);
  Mat a = random_matrix(F, size_t(state.range(0)), 3);
  for (auto _ : state) {
    Mat c = a;
    auto piv = c.rref_in_place();
    benchmark::DoNotOptimize(piv);
  }
}
BENCHMARK(BM_rref_parallel)->Arg(64)->Arg(128)->Arg(256);

void BM_enumerate_sl2_serial(benchmark::State& state) {
  auto g = GroupSpec::make(Ring::int_mod(3, uint32_t(state.range(0))), GroupSpec::Kind::SL2);
  for (auto _ : state) {
    auto v = g->enumerate_serial_reference();
    benchmark::DoNotOptimize(v.size());
  }
}
BENCHMARK(BM_enumerate_sl2_serial)->Arg(2)->Arg(3)->Arg(4);

void BM_enumerate_sl2_parallel(benchmark::State& state) {
  for (auto _ : state) {
    auto g = GroupSpec::make(Ring::int_mod(3, uint32_t(state.range(0))), GroupSpec::Kind::SL2);
    benchmark::DoNotOptimize(g->enumerate().size());
  }
}
BENCHMARK(BM_enumerate_sl2_parallel)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

#else

#include <chrono>
#include <cstdio>

using namespace sl2p;

int main() {
  FieldPtr F = make_field(241, 1);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<uint32_t> pick(0, 240);
  for (size_t n : {64, 128, 256}) {
    Mat a(F, n, n), b(F, n, n);
    for (auto& e : a.entries()) e = pick(rng);
    for (auto& e : b.entries()) e = pick(rng);
    auto t0 = std::chrono::steady_clock::now();
    Mat c1 = Mat::mul_serial(a, b);
    auto t1 = std::chrono::steady_clock::now();
    Mat c2 = Mat::mul(a, b);
    auto t2 = std::chrono::steady_clock::now();
    std::printf("mul n=%zu: serial %.3fms, parallel %.3fms, equal=%d\n", n,
                std::chrono::duration<double, std::milli>(t1 - t0).count(),
                std::chrono::duration<double, std::milli>(t2 - t1).count(), c1 == c2);
  }
  return 0;
}

#endif
