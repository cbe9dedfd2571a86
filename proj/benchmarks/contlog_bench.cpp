#include <benchmark/benchmark.h>

#include <vector>

#include "contlog/codec.hpp"
#include "contlog/dimension.hpp"
#include "contlog/experiments.hpp"
#include "contlog/frequency.hpp"

namespace {

using namespace contlog;

const mpq_class kPoint(123456789, 987654321);

void BM_EncodeOrbit(benchmark::State& state) {
  const auto digits = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_orbit(kPoint, Base(3), digits, PrecisionContext(128)));
  }
}
BENCHMARK(BM_EncodeOrbit)->Arg(20)->Arg(60)->Arg(200);

void BM_EncodeSubdivide(benchmark::State& state) {
  const auto digits = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_subdivide(kPoint, Base(3), digits, PrecisionContext(128)));
  }
}
BENCHMARK(BM_EncodeSubdivide)->Arg(20)->Arg(60);

void BM_WordInterval(benchmark::State& state) {
  const Word w = Word::repeated(Base(7), 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(word_interval(w, PrecisionContext(128)));
}
BENCHMARK(BM_WordInterval)->Arg(8)->Arg(64);

void BM_DimensionBracket(benchmark::State& state) {
  const DigitSet set(Base(4), {1, 2});
  BracketOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dimension_bracket(set, static_cast<std::size_t>(state.range(0)), PrecisionContext(128),
                                               options));
  }
}
BENCHMARK(BM_DimensionBracket)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MoranSolve(benchmark::State& state) {
  std::vector<double> ratios(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < ratios.size(); ++i) ratios[i] = 0.5 / static_cast<double>(i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(moran_solve(ratios));
}
BENCHMARK(BM_MoranSolve)->Arg(2)->Arg(4096);

void BM_MaxFreqDim(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_freq_dim(Base(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_MaxFreqDim)->Arg(3)->Arg(16);

void BM_StructureCheck(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(structure_check(Base(4), static_cast<std::size_t>(state.range(0)), PrecisionContext(128)));
  }
}
BENCHMARK(BM_StructureCheck)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
