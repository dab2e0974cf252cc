#include <benchmark/benchmark.h>

#include <random>

#include "unifac/cover.hpp"

using namespace unifac;

namespace {

cover::Cover involution_cover(const cover::GroupFamily& fam, std::mt19937_64& rng) {
  cover::Cover c;
  for (uint32_t n = 0; n < fam.window(); ++n) {
    const auto& G = *fam.groups[n];
    uint64_t g = G.element_at(rng() % std::min<uint64_t>(G.size(), 1u << 16));
    std::vector<uint64_t> s = {G.identity(), g, G.inv(g)};
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    c.sets.push_back(std::move(s));
  }
  return c;
}

}  // namespace

static void BM_Star(benchmark::State& state) {
  auto fam = cover::make_family({"sym:8", "sym:10"});
  std::mt19937_64 rng(1);
  auto a = involution_cover(fam, rng), b = involution_cover(fam, rng);
  for (auto _ : state) {
    auto c = cover::star(fam, a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Star);

static void BM_ClosureDepth2(benchmark::State& state) {
  auto fam = cover::make_family({"sym:6", "sym:8"});
  std::mt19937_64 rng(2);
  std::vector<cover::Cover> cs;
  for (int i = 0; i < 4; ++i) cs.push_back(involution_cover(fam, rng));
  for (auto _ : state) {
    auto cl = cover::closure_enumerate(fam, cs, 2);
    benchmark::DoNotOptimize(cl.size());
  }
}
BENCHMARK(BM_ClosureDepth2)->Unit(benchmark::kMillisecond);
