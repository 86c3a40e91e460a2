// Parallel kernels against their serial references on one synthetic corpus.

#include <benchmark/benchmark.h>

#include "spikelv/kernels.hpp"
#include "spikelv/null_model.hpp"
#include "spikelv/reference.hpp"
#include "spikelv/synthetic.hpp"

namespace {

using namespace spikelv;

const Corpus& corpus() {
  static const Corpus c = [] {
    std::vector<TagSpec> specs;
    Philox4x32 sizes(7);
    const TimeSpan span{0, 30 * 86400.0};
    for (int k = 0; k < 20000; ++k) {
      const auto n = discrete_power_law(sizes, 2.0, 50000);
      specs.push_back({"t" + std::to_string(k), ProcessKind::kGamma,
                       static_cast<double>(n) / span.length(), 0.5, 0, 1,
                       derive_seed(7, std::to_string(k))});
    }
    return quantized_corpus(specs, generate_all(specs, span), span);
  }();
  return c;
}

void threads_arg(benchmark::State& state) { set_worker_threads(static_cast<int>(state.range(0))); }

void BM_CorpusLv(benchmark::State& state) {
  threads_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(corpus_lv(corpus()));
}

void BM_CorpusLvReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::corpus_lv(corpus()));
}

void BM_SplitHalf(benchmark::State& state) {
  threads_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(corpus_split_half(corpus()));
}

void BM_SplitHalfReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::corpus_split_half(corpus()));
}

void BM_Randomize(benchmark::State& state) {
  threads_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(randomize_corpus(corpus(), 1));
}

void BM_RandomizeReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::randomize_corpus(corpus(), 1));
}

BENCHMARK(BM_CorpusLv)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusLvReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SplitHalf)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SplitHalfReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Randomize)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomizeReference)->Unit(benchmark::kMillisecond);

}  // namespace
