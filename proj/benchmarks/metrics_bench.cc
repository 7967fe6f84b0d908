#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ccomp/metrics.h"

namespace {

std::vector<std::string> Tokens(int n, int shift) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("t" + std::to_string((i * 7 + shift) % 13));
  return out;
}

void BM_Levenshtein(benchmark::State& state) {
  auto a = Tokens(static_cast<int>(state.range(0)), 0);
  auto b = Tokens(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ccomp::LevenshteinWords(a, b));
}
BENCHMARK(BM_Levenshtein)->Arg(10)->Arg(50);

void BM_BleuA(benchmark::State& state) {
  auto a = Tokens(static_cast<int>(state.range(0)), 0);
  auto b = Tokens(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ccomp::BleuA(a, b));
}
BENCHMARK(BM_BleuA)->Arg(10)->Arg(50);

}  // namespace
