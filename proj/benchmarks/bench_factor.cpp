#include <benchmark/benchmark.h>

#include "unifac/class_cover.hpp"
#include "unifac/perm_factor.hpp"
#include "unifac/sl_factor.hpp"

using namespace unifac;

static void BM_Brenner(benchmark::State& state) {
  auto phi = perm::parse_cycles("(1 2 3 4 5)(6 7 8)", 8);
  perm::brenner_factor(phi, 2);  // warm the class product table
  for (auto _ : state) {
    auto w = perm::brenner_factor(phi, 2);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_Brenner);

static void BM_Uni2(benchmark::State& state) {
  auto phi = perm::parse_cycles("(1 2 3 4 5 6 7)", 8);
  perm::uni2_factor(phi, 1);
  for (auto _ : state) {
    auto w = perm::uni2_factor(phi, 1);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_Uni2);

static void BM_SlStep(benchmark::State& state) {
  const auto& F = gf::make_field(3, 1);
  std::mt19937_64 rng(3);
  auto phi = mat::random_sl(F, 4, rng);
  for (auto _ : state) {
    auto w = mat::sl_step_factor(phi);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_SlStep);

static void BM_SlDouble(benchmark::State& state) {
  const auto& F = gf::make_field(2, 1);
  std::mt19937_64 rng(4);
  auto phi = mat::random_sl(F, 8, rng);
  mat::sl_double_factor(phi);  // warm caches
  for (auto _ : state) {
    auto w = mat::sl_double_factor(phi);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_SlDouble);

static void BM_CoveringBfs(benchmark::State& state) {
  const auto& F = gf::make_field(2, 1);
  auto rep = mat::involution_class_rep(F, 1);
  for (auto _ : state) {
    auto prof = mat::class_covering_radius(rep);
    benchmark::DoNotOptimize(prof.radius);
  }
}
BENCHMARK(BM_CoveringBfs)->Unit(benchmark::kMillisecond);
