#include <benchmark/benchmark.h>

#include "unifac/finite_field.hpp"
#include "unifac/matrix.hpp"

using namespace unifac;

static void BM_FieldMul(benchmark::State& state) {
  const auto& F = gf::make_field(3, static_cast<uint32_t>(state.range(0)));
  uint32_t a = F.q / 2, b = F.q / 3 + 1;
  for (auto _ : state) {
    a = F.mul(a, b) | 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(4);

static void BM_FieldInv(benchmark::State& state) {
  const auto& F = gf::make_field(2, static_cast<uint32_t>(state.range(0)));
  uint32_t a = F.q - 1;
  for (auto _ : state) {
    a = F.inv(a);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldInv)->Arg(4)->Arg(8);

static void BM_MatMul(benchmark::State& state) {
  const auto& F = gf::make_field(2, 1);
  std::mt19937_64 rng(1);
  auto a = mat::random_sl(F, static_cast<uint32_t>(state.range(0)), rng);
  auto b = mat::random_sl(F, static_cast<uint32_t>(state.range(0)), rng);
  for (auto _ : state) {
    auto c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(8);
