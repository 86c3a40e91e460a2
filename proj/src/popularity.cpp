#include "spikelv/popularity.hpp"

#include <algorithm>
#include <charconv>

#include "spikelv/error.hpp"

namespace spikelv {

ClassScheme ClassScheme::from_edges(std::span<const std::uint64_t> edges) {
  if (edges.empty() || edges.front() != 1) {
    throw InvalidArgument("class edges must start at 1");
  }
  ClassScheme s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::uint64_t lo = edges[i];
    const std::uint64_t hi = i + 1 < edges.size() ? edges[i + 1] : kUnbounded;
    if (lo >= hi) throw InvalidArgument("class edges must be strictly increasing");
    std::string label = "p" + std::to_string(lo);
    if (hi == kUnbounded) {
      label += "-inf";
    } else if (hi - lo > 1) {
      label += "-" + std::to_string(hi - 1);
    }
    s.classes_.push_back({std::move(label), lo, hi});
  }
  return s;
}

ClassScheme ClassScheme::parse(std::string_view text) {
  std::vector<std::uint64_t> edges;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw InvalidArgument("bad class edge '" + std::string(field) + "'");
    }
    edges.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_edges(edges);
}

ClassScheme ClassScheme::default_scheme() {
  static constexpr std::uint64_t kEdges[] = {1, 2, 5, 50, 500, 5000, 25000, 100000};
  return from_edges(kEdges);
}

std::size_t ClassScheme::index_of(std::uint64_t p) const {
  if (p < 1) throw InvalidArgument("popularity must be >= 1");
  auto it = std::upper_bound(classes_.begin(), classes_.end(), p,
                             [](std::uint64_t v, const PopularityClass& c) { return v < c.lo; });
  return static_cast<std::size_t>(it - classes_.begin()) - 1;
}

std::vector<std::uint64_t> ClassScheme::edges() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : classes_) out.push_back(c.lo);
  return out;
}

const PopularityClass& classify(std::uint64_t p_raw, const ClassScheme& scheme) {
  return scheme[scheme.index_of(p_raw)];
}

std::int64_t default_interval_bin_width(const PopularityClass& cls) noexcept {
  if (cls.lo >= 25000) return 480;
  if (cls.lo >= 5) return 5400;
  return 7200;
}

}  // namespace spikelv
