#include <benchmark/benchmark.h>

#include "cliffsyl/inversion.hpp"
#include "cliffsyl/random.hpp"

using namespace cliffsyl;

namespace {

Signature sig_for(int n) { return Signature(n, 0); }

}  // namespace

static void BM_ProductRational(benchmark::State& state) {
  const Signature sig = sig_for(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto a = random_multivector(sig, rng, 9, 4), b = random_multivector(sig, rng, 9, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ProductRational)->DenseRange(1, 6);

static void BM_ProductFloat(benchmark::State& state) {
  const Signature sig = sig_for(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto a = random_float_multivector(sig, rng), b = random_float_multivector(sig, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ProductFloat)->DenseRange(1, 6);

static void BM_InverseN3Rational(benchmark::State& state) {
  const Signature sig(3, 0);
  std::mt19937_64 rng(2);
  const auto a = random_multivector(sig, rng, 9, 4);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_n3(a));
}
BENCHMARK(BM_InverseN3Rational);

static void BM_InverseN3Float(benchmark::State& state) {
  const Signature sig(3, 0);
  std::mt19937_64 rng(2);
  const auto a = random_float_multivector(sig, rng);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_n3(a));
}
BENCHMARK(BM_InverseN3Float);
