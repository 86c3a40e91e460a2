#include "spikelv/reference.hpp"

namespace spikelv::reference {

std::optional<double> naive_lv(std::span<const std::int64_t> times) {
  if (times.size() < 3) return std::nullopt;
  std::vector<double> intervals;
  for (std::size_t i = 1; i < times.size(); ++i) {
    intervals.push_back(static_cast<double>(times[i] - times[i - 1]));
  }
  return naive_lv_intervals(intervals);
}

std::optional<double> naive_lv_intervals(std::span<const double> intervals) {
  if (intervals.size() < 2) return std::nullopt;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    const double a = intervals[i];
    const double b = intervals[i + 1];
    sum += (b - a) * (b - a) / ((b + a) * (b + a));
  }
  return 3.0 * sum / static_cast<double>(intervals.size() - 1);
}

std::vector<std::optional<LvResult>> corpus_lv(const Corpus& corpus) {
  std::vector<std::optional<LvResult>> out;
  out.reserve(corpus.size());
  for (const auto& tr : corpus) {
    out.push_back(tr.n_spikes() >= 3 ? std::optional(local_variation(tr)) : std::nullopt);
  }
  return out;
}

std::vector<std::optional<SplitHalf>> corpus_split_half(const Corpus& corpus) {
  std::vector<std::optional<SplitHalf>> out;
  out.reserve(corpus.size());
  for (const auto& tr : corpus) {
    out.push_back(tr.n_spikes() >= 6 ? std::optional(split_half_lv(tr)) : std::nullopt);
  }
  return out;
}

Corpus randomize_corpus(const Corpus& corpus, std::uint64_t seed) {
  const MergedTrain merged = merge_trains(corpus);
  std::vector<SpikeTrain> out;
  out.reserve(corpus.size());
  for (const auto& tr : corpus) {
    out.push_back(
        sample_null_train(merged, tr.n_spikes(), null_train_seed(seed, tr.tag()), tr.tag()));
  }
  return Corpus(std::move(out), corpus.window());
}

}  // namespace spikelv::reference
