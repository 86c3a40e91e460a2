#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spikelv/random.hpp"
#include "spikelv/spike_train.hpp"

namespace spikelv {

/// Sorted distinct active seconds over every train of a corpus: the support
/// from which randomized trains are drawn.
class MergedTrain {
 public:
  MergedTrain() = default;
  /// times must be strictly increasing; throws InvalidArgument otherwise.
  explicit MergedTrain(std::vector<std::int64_t> times);

  std::span<const std::int64_t> times() const noexcept { return times_; }
  std::size_t size() const noexcept { return times_.size(); }

 private:
  std::vector<std::int64_t> times_;
};

/// Set union of all train times. Throws InvalidArgument for an empty corpus.
MergedTrain merge_trains(const Corpus& corpus);

enum class ShuffleStorage {
  kAuto,    // sparse when n is small relative to the population
  kDense,   // full index array
  kSparse,  // hash map of displaced slots, O(n) memory
};

/// Partial Fisher-Yates: for i in [0, n) swap slot i with a uniform slot in
/// [i, population) and emit slot i. Both storages consume identical random
/// draws and return identical sequences (in draw order, not sorted).
std::vector<std::uint64_t> sample_without_replacement(std::uint64_t population, std::uint64_t n,
                                                      Philox4x32& rng,
                                                      ShuffleStorage storage = ShuffleStorage::kAuto);

/// n distinct merged timestamps, uniform without replacement, returned as a
/// sorted train with unit multiplicities. Deterministic in seed. Throws
/// InvalidArgument("popularity exceeds merged support") when n > |merged|.
SpikeTrain sample_null_train(const MergedTrain& merged, std::uint64_t n, std::uint64_t seed,
                             std::string tag = "null");

/// Sub-seed used for the null train of `tag`.
inline std::uint64_t null_train_seed(std::uint64_t seed, std::string_view tag) noexcept {
  return derive_seed(seed, tag);
}

/// One randomized train per real train, matched on n_spikes and drawn from
/// the corpus's own merged train. Runs in parallel over trains; the output is
/// independent of thread count.
Corpus randomize_corpus(const Corpus& corpus, std::uint64_t seed);

/// Same as above with an explicit merged train (must cover the corpus).
Corpus randomize_corpus(const Corpus& corpus, const MergedTrain& merged, std::uint64_t seed);

}  // namespace spikelv
