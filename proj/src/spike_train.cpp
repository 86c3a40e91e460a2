#include "spikelv/spike_train.hpp"

#include <algorithm>

#include "spikelv/error.hpp"

namespace spikelv {

SpikeTrain::SpikeTrain(std::string tag, std::vector<std::int64_t> times,
                       std::vector<std::uint32_t> counts)
    : tag_(std::move(tag)), times_(std::move(times)), counts_(std::move(counts)) {
  if (tag_.empty()) throw InvalidArgument("spike train tag must be non-empty");
  if (times_.size() != counts_.size()) {
    throw InvalidArgument("spike train '" + tag_ + "': times/counts length mismatch");
  }
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (counts_[i] == 0) {
      throw InvalidArgument("spike train '" + tag_ + "': zero multiplicity");
    }
    if (i > 0 && times_[i] <= times_[i - 1]) {
      throw InvalidArgument("spike train '" + tag_ + "': times not strictly increasing");
    }
    p_raw_ += counts_[i];
  }
}

SpikeTrain SpikeTrain::from_times(std::string tag, std::vector<std::int64_t> times) {
  std::vector<std::uint32_t> counts(times.size(), 1);
  return SpikeTrain(std::move(tag), std::move(times), std::move(counts));
}

std::vector<std::int64_t> inter_event_intervals(const SpikeTrain& train) {
  if (train.n_spikes() < 2) throw InvalidArgument("train too short for intervals");
  const auto t = train.times();
  std::vector<std::int64_t> out(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) out[i - 1] = t[i] - t[i - 1];
  return out;
}

Corpus::Corpus(std::vector<SpikeTrain> trains, Window window)
    : trains_(std::move(trains)), window_(window) {
  std::sort(trains_.begin(), trains_.end(),
            [](const SpikeTrain& a, const SpikeTrain& b) { return a.tag() < b.tag(); });
  for (std::size_t i = 0; i < trains_.size(); ++i) {
    const auto& tr = trains_[i];
    if (i > 0 && trains_[i - 1].tag() == tr.tag()) {
      throw InvalidArgument("duplicate tag in corpus: " + tr.tag());
    }
    if (tr.n_spikes() > 0 &&
        (!window_.contains(tr.times().front()) || !window_.contains(tr.times().back()))) {
      throw InvalidArgument("train '" + tr.tag() + "' lies outside the corpus window");
    }
  }
}

const SpikeTrain* Corpus::find(std::string_view tag) const {
  auto it = std::lower_bound(
      trains_.begin(), trains_.end(), tag,
      [](const SpikeTrain& a, std::string_view t) { return a.tag() < t; });
  if (it == trains_.end() || it->tag() != tag) return nullptr;
  return &*it;
}

std::uint64_t Corpus::total_events() const noexcept {
  std::uint64_t total = 0;
  for (const auto& t : trains_) total += t.p_raw();
  return total;
}

Ingestor::Ingestor(std::optional<Window> window) : window_(window) {
  if (window_ && window_->start >= window_->end) {
    throw InvalidArgument("window start must precede window end");
  }
}

void Ingestor::add_line(std::string_view line) {
  auto parsed = parse_event_line(line);
  switch (parsed.kind) {
    case LineKind::kSkip:
      ++report_.skipped;
      break;
    case LineKind::kMalformed:
      ++report_.rejected;
      break;
    case LineKind::kEvent:
      accept(parsed.record.time, std::move(parsed.record.tag));
      break;
  }
}

void Ingestor::add(const EventRecord& record) { add_raw(record.time, record.tag); }

void Ingestor::add_raw(std::int64_t time, std::string_view raw_tag) {
  auto tag = normalize_tag(raw_tag);
  if (time < 0 || !tag) {
    ++report_.rejected;
    return;
  }
  accept(time, std::move(*tag));
}

void Ingestor::accept(std::int64_t time, std::string tag) {
  if (window_ && !window_->contains(time)) {
    ++report_.out_of_window;
    return;
  }
  if (report_.accepted == 0) {
    min_seen_ = max_seen_ = time;
  } else {
    min_seen_ = std::min(min_seen_, time);
    max_seen_ = std::max(max_seen_, time);
  }
  ++report_.accepted;
  pending_[std::move(tag)].push_back(time);
}

IngestResult Ingestor::finish() && {
  Window window;
  if (window_) {
    window = *window_;
  } else if (report_.accepted > 0) {
    window = {min_seen_, std::max(max_seen_, min_seen_ + 1)};
  } else {
    window = {0, 1};
  }

  std::vector<SpikeTrain> trains;
  trains.reserve(pending_.size());
  for (auto& [tag, raw] : pending_) {
    std::sort(raw.begin(), raw.end());
    std::vector<std::int64_t> times;
    std::vector<std::uint32_t> counts;
    for (std::size_t i = 0; i < raw.size();) {
      std::size_t j = i;
      while (j < raw.size() && raw[j] == raw[i]) ++j;
      times.push_back(raw[i]);
      counts.push_back(static_cast<std::uint32_t>(j - i));
      i = j;
    }
    trains.emplace_back(tag, std::move(times), std::move(counts));
  }
  pending_.clear();
  return {Corpus(std::move(trains), window), report_};
}

IngestResult ingest_events(std::span<const EventRecord> records, Window window) {
  Ingestor ing(window);
  for (const auto& r : records) ing.add(r);
  return std::move(ing).finish();
}

}  // namespace spikelv
