#include "spikelv/local_variation.hpp"

#include <algorithm>
#include <cmath>

#include "spikelv/error.hpp"

namespace spikelv {

namespace {

inline double lv_term(double prev, double next) noexcept {
  const double r = (next - prev) / (next + prev);
  return r * r;
}

LvResult finish(const CompensatedSum& sum, std::size_t n_terms) {
  const double lv = 3.0 * sum.value() / static_cast<double>(n_terms);
  return {std::clamp(lv, 0.0, 3.0), n_terms + 2, n_terms};
}

template <typename T>
LvResult lv_intervals_impl(std::span<const T> intervals) {
  if (intervals.size() < 2) throw InvalidArgument("undefined local variation");
  CompensatedSum sum;
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    sum.add(lv_term(static_cast<double>(intervals[i - 1]), static_cast<double>(intervals[i])));
  }
  return finish(sum, intervals.size() - 1);
}

}  // namespace

LvResult lv_from_intervals(std::span<const double> intervals) {
  return lv_intervals_impl(intervals);
}

LvResult lv_from_intervals(std::span<const std::int64_t> intervals) {
  return lv_intervals_impl(intervals);
}

LvResult local_variation(std::span<const std::int64_t> times) {
  if (times.size() < 3) throw InvalidArgument("undefined local variation");
  CompensatedSum sum;
  auto prev = static_cast<double>(times[1] - times[0]);
  for (std::size_t i = 2; i < times.size(); ++i) {
    const auto next = static_cast<double>(times[i] - times[i - 1]);
    sum.add(lv_term(prev, next));
    prev = next;
  }
  return finish(sum, times.size() - 2);
}

LvResult local_variation(const SpikeTrain& train) { return local_variation(train.times()); }

double expected_lv_gamma(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidArgument("gamma shape must be positive and finite");
  }
  return 3.0 / (2.0 * kappa + 1.0);
}

double shape_from_lv(double lv) {
  if (!(lv > 0.0) || lv > 3.0) throw InvalidArgument("local variation must lie in (0, 3]");
  if (lv == 3.0) throw InvalidArgument("degenerate shape");
  return (3.0 / lv - 1.0) / 2.0;
}

std::pair<LvResult, LvResult> split_half_lv(std::span<const std::int64_t> times) {
  if (times.size() < 6) throw InvalidArgument("too short to split");
  const std::size_t first = (times.size() + 1) / 2;
  return {local_variation(times.first(first)), local_variation(times.subspan(first))};
}

std::pair<LvResult, LvResult> split_half_lv(const SpikeTrain& train) {
  return split_half_lv(train.times());
}

}  // namespace spikelv
