#pragma once

// Serial reference implementations, kept as test oracles and as the baseline
// for the kernel benchmarks. Deliberately straightforward: no compensation,
// no streaming, no threads.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spikelv/kernels.hpp"
#include "spikelv/null_model.hpp"

namespace spikelv::reference {

/// Two passes: materialize intervals, then sum the terms naively.
/// Returns nullopt for fewer than three spikes.
std::optional<double> naive_lv(std::span<const std::int64_t> times);
std::optional<double> naive_lv_intervals(std::span<const double> intervals);

std::vector<std::optional<LvResult>> corpus_lv(const Corpus& corpus);
std::vector<std::optional<SplitHalf>> corpus_split_half(const Corpus& corpus);

/// Serial loop over trains with the same per-tag sub-seeds as the parallel one.
Corpus randomize_corpus(const Corpus& corpus, std::uint64_t seed);

}  // namespace spikelv::reference
