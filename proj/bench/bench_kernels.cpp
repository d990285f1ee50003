// Serial reference vs. row-parallel multiplication, and serial vs. parallel verification.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "modinv/mpoly.hpp"
#include "modinv/verify.hpp"

using namespace modinv;

namespace {

MPoly dense_uv(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<MPoly::Term> terms;
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; j <= deg - i; ++j) {
      BigRat c(num(rng), den(rng));
      c.canonicalize();
      terms.emplace_back(Exp{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, c);
    }
  }
  return MPoly::from_terms(Vars::uv, std::move(terms));
}

template <MPoly (*Mul)(const MPoly&, const MPoly&)>
void BM_mul(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const int deg = static_cast<int>(state.range(0));
  const MPoly a = dense_uv(rng, deg);
  const MPoly b = dense_uv(rng, deg);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(a.size() * b.size()));
}

void BM_verify_serial(benchmark::State& state) {
  const int hi = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int g = 3; g <= hi; ++g) benchmark::DoNotOptimize(verify_genus(g));
  }
}

void BM_verify_parallel(benchmark::State& state) {
  const int hi = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(3, hi));
}

}  // namespace

BENCHMARK(BM_mul<kernels::mul_reference>)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul<kernels::mul_rows_serial>)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul<kernels::mul_parallel>)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_parallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
