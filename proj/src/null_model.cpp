#include "spikelv/null_model.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <unordered_map>

#include "spikelv/error.hpp"

namespace spikelv {

MergedTrain::MergedTrain(std::vector<std::int64_t> times) : times_(std::move(times)) {
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (times_[i] <= times_[i - 1]) {
      throw InvalidArgument("merged train must be strictly increasing");
    }
  }
}

MergedTrain merge_trains(const Corpus& corpus) {
  if (corpus.empty()) throw InvalidArgument("cannot merge an empty corpus");
  std::size_t total = 0;
  for (const auto& tr : corpus) total += tr.n_spikes();
  std::vector<std::int64_t> all;
  all.reserve(total);
  for (const auto& tr : corpus) all.insert(all.end(), tr.times().begin(), tr.times().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return MergedTrain(std::move(all));
}

std::vector<std::uint64_t> sample_without_replacement(std::uint64_t population, std::uint64_t n,
                                                      Philox4x32& rng, ShuffleStorage storage) {
  if (n > population) throw InvalidArgument("sample larger than population");
  if (storage == ShuffleStorage::kAuto) {
    storage = n * 8 < population ? ShuffleStorage::kSparse : ShuffleStorage::kDense;
  }
  std::vector<std::uint64_t> out;
  out.reserve(n);

  if (storage == ShuffleStorage::kDense) {
    std::vector<std::uint64_t> slots(population);
    std::iota(slots.begin(), slots.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::uint64_t j = i + uniform_below(rng, population - i);
      std::swap(slots[i], slots[j]);
      out.push_back(slots[i]);
    }
    return out;
  }

  // Untouched slots hold their own index; only displaced ones are stored.
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(2 * n);
  auto value_at = [&](std::uint64_t k) {
    auto it = displaced.find(k);
    return it == displaced.end() ? k : it->second;
  };
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t j = i + uniform_below(rng, population - i);
    const std::uint64_t vi = value_at(i);
    const std::uint64_t vj = value_at(j);
    displaced[j] = vi;
    out.push_back(vj);
  }
  return out;
}

SpikeTrain sample_null_train(const MergedTrain& merged, std::uint64_t n, std::uint64_t seed,
                             std::string tag) {
  if (n > merged.size()) throw InvalidArgument("popularity exceeds merged support");
  Philox4x32 rng(seed);
  const auto picks = sample_without_replacement(merged.size(), n, rng);
  std::vector<std::int64_t> times;
  times.reserve(picks.size());
  for (auto k : picks) times.push_back(merged.times()[k]);
  std::sort(times.begin(), times.end());
  return SpikeTrain::from_times(std::move(tag), std::move(times));
}

Corpus randomize_corpus(const Corpus& corpus, std::uint64_t seed) {
  return randomize_corpus(corpus, merge_trains(corpus), seed);
}

Corpus randomize_corpus(const Corpus& corpus, const MergedTrain& merged, std::uint64_t seed) {
  const auto& trains = corpus.trains();
  const auto count = static_cast<std::int64_t>(trains.size());
  std::vector<SpikeTrain> out(trains.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& tr = trains[static_cast<std::size_t>(k)];
    try {
      out[static_cast<std::size_t>(k)] =
          sample_null_train(merged, tr.n_spikes(), null_train_seed(seed, tr.tag()), tr.tag());
    } catch (...) {
#pragma omp critical(spikelv_null_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return Corpus(std::move(out), corpus.window());
}

}  // namespace spikelv
