#pragma once

// Corpus-wide per-train kernels, parallelized with OpenMP over trains.
// Results are written by train index, so output never depends on scheduling.
// Serial reference counterparts live in reference.hpp.

#include <optional>
#include <utility>
#include <vector>

#include "spikelv/local_variation.hpp"
#include "spikelv/spike_train.hpp"

namespace spikelv {

using SplitHalf = std::pair<LvResult, LvResult>;

/// L_V of every train in corpus order; nullopt where n_spikes < 3.
std::vector<std::optional<LvResult>> corpus_lv(const Corpus& corpus);

/// Split-half L_V of every train; nullopt where n_spikes < 6.
std::vector<std::optional<SplitHalf>> corpus_split_half(const Corpus& corpus);

/// Bounds the OpenMP worker pool; n <= 0 restores the runtime default.
void set_worker_threads(int n);
int worker_threads();

}  // namespace spikelv
