#include "spikelv/kernels.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spikelv {

namespace {
#ifdef _OPENMP
const int kDefaultThreads = omp_get_max_threads();
#endif
}  // namespace

std::vector<std::optional<LvResult>> corpus_lv(const Corpus& corpus) {
  const auto& trains = corpus.trains();
  const auto count = static_cast<std::int64_t>(trains.size());
  std::vector<std::optional<LvResult>> out(trains.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& tr = trains[static_cast<std::size_t>(k)];
    if (tr.n_spikes() >= 3) out[static_cast<std::size_t>(k)] = local_variation(tr);
  }
  return out;
}

std::vector<std::optional<SplitHalf>> corpus_split_half(const Corpus& corpus) {
  const auto& trains = corpus.trains();
  const auto count = static_cast<std::int64_t>(trains.size());
  std::vector<std::optional<SplitHalf>> out(trains.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& tr = trains[static_cast<std::size_t>(k)];
    if (tr.n_spikes() >= 6) out[static_cast<std::size_t>(k)] = split_half_lv(tr);
  }
  return out;
}

void set_worker_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : kDefaultThreads);
#else
  (void)n;
#endif
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace spikelv
