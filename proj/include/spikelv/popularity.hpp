#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spikelv {

inline constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

/// Half-open popularity interval [lo, hi). hi == kUnbounded means no upper edge.
struct PopularityClass {
  std::string label;
  std::uint64_t lo = 1;
  std::uint64_t hi = kUnbounded;

  bool contains(std::uint64_t p) const noexcept { return p >= lo && p < hi; }
  friend bool operator==(const PopularityClass&, const PopularityClass&) = default;
};

/// Ordered, disjoint classes covering [1, inf).
class ClassScheme {
 public:
  /// edges = {1, e1, e2, ..., ek}; the last class is [ek, inf). Edges must be
  /// strictly increasing and start at 1. Labels are "p<lo>-<hi-1>", "p<lo>"
  /// for single-value classes, and "p<lo>-inf" for the last one.
  static ClassScheme from_edges(std::span<const std::uint64_t> edges);

  /// Parses comma-separated edges, e.g. "1,2,5,50".
  static ClassScheme parse(std::string_view text);

  /// Edges 1,2,5,50,500,5000,25000,100000.
  static ClassScheme default_scheme();

  const std::vector<PopularityClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const PopularityClass& operator[](std::size_t i) const { return classes_[i]; }

  /// Index of the unique class with lo <= p < hi. Throws InvalidArgument for p < 1.
  std::size_t index_of(std::uint64_t p) const;

  std::vector<std::uint64_t> edges() const;

 private:
  std::vector<PopularityClass> classes_;
};

const PopularityClass& classify(std::uint64_t p_raw, const ClassScheme& scheme);

/// Default linear bin width in seconds for inter-event histograms of a class:
/// 480 s for lo >= 25000, 5400 s for lo >= 5, otherwise 7200 s.
std::int64_t default_interval_bin_width(const PopularityClass& cls) noexcept;

}  // namespace spikelv
