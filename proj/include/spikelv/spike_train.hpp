#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spikelv/event.hpp"

namespace spikelv {

/// Closed observation window [start, end] in integer seconds.
struct Window {
  std::int64_t start = 0;
  std::int64_t end = 0;

  bool contains(std::int64_t t) const noexcept { return t >= start && t <= end; }
  std::int64_t length() const noexcept { return end - start + 1; }

  friend bool operator==(const Window&, const Window&) = default;
};

/// Deduplicated, second-resolution event times of one tag.
///
/// times are strictly increasing; counts[i] >= 1 is the number of raw
/// occurrences that fell in second times[i]. p_raw (popularity) is the sum of
/// counts, n_spikes the number of distinct seconds.
class SpikeTrain {
 public:
  SpikeTrain() = default;

  /// Validates the invariants; throws InvalidArgument on violation.
  SpikeTrain(std::string tag, std::vector<std::int64_t> times,
             std::vector<std::uint32_t> counts);

  /// Train with every multiplicity equal to one.
  static SpikeTrain from_times(std::string tag, std::vector<std::int64_t> times);

  const std::string& tag() const noexcept { return tag_; }
  std::span<const std::int64_t> times() const noexcept { return times_; }
  std::span<const std::uint32_t> counts() const noexcept { return counts_; }
  std::uint64_t p_raw() const noexcept { return p_raw_; }
  std::size_t n_spikes() const noexcept { return times_.size(); }

  friend bool operator==(const SpikeTrain&, const SpikeTrain&) = default;

 private:
  std::string tag_;
  std::vector<std::int64_t> times_;
  std::vector<std::uint32_t> counts_;
  std::uint64_t p_raw_ = 0;
};

/// Inter-event intervals times[i] - times[i-1]; all >= 1 on the integer grid.
/// Throws InvalidArgument("train too short for intervals") when n_spikes < 2.
std::vector<std::int64_t> inter_event_intervals(const SpikeTrain& train);

/// Immutable set of trains sharing one window, ordered by tag.
class Corpus {
 public:
  Corpus() = default;

  /// Throws InvalidArgument on duplicate tags or times outside the window.
  Corpus(std::vector<SpikeTrain> trains, Window window);

  const std::vector<SpikeTrain>& trains() const noexcept { return trains_; }
  const Window& window() const noexcept { return window_; }
  std::size_t size() const noexcept { return trains_.size(); }
  bool empty() const noexcept { return trains_.empty(); }

  /// nullptr if the tag is absent.
  const SpikeTrain* find(std::string_view tag) const;

  std::uint64_t total_events() const noexcept;

  auto begin() const noexcept { return trains_.begin(); }
  auto end() const noexcept { return trains_.end(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::vector<SpikeTrain> trains_;
  Window window_;
};

struct IngestReport {
  std::uint64_t accepted = 0;       // in-window records kept
  std::uint64_t rejected = 0;       // malformed lines or records
  std::uint64_t out_of_window = 0;  // well-formed but dropped
  std::uint64_t skipped = 0;        // comments and blank lines
};

struct IngestResult {
  Corpus corpus;
  IngestReport report;
};

/// Single-pass fold over raw events. Records may arrive in any order.
class Ingestor {
 public:
  /// With no window, the window is inferred as [min time, max time] of the
  /// accepted records (widened to one second past min for a single instant).
  explicit Ingestor(std::optional<Window> window = std::nullopt);

  void add_line(std::string_view line);
  void add(const EventRecord& record);
  /// Tag is normalized here; an unusable tag or negative time is rejected.
  void add_raw(std::int64_t time, std::string_view raw_tag);

  IngestResult finish() &&;

 private:
  void accept(std::int64_t time, std::string tag);

  std::optional<Window> window_;
  std::unordered_map<std::string, std::vector<std::int64_t>> pending_;
  IngestReport report_;
  std::int64_t min_seen_ = 0;
  std::int64_t max_seen_ = 0;
};

/// Convenience wrapper; throws InvalidArgument if window.start >= window.end.
IngestResult ingest_events(std::span<const EventRecord> records, Window window);

}  // namespace spikelv
