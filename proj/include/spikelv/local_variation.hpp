#pragma once

// Local variation of a spike train:
//
//   L_V = 3/(N-2) * sum_{i=2}^{N-1} ((dt_{i+1} - dt_i) / (dt_{i+1} + dt_i))^2
//
// where dt_i = t_i - t_{i-1}. L_V is 1 for Poisson trains (stationary or with
// a slowly varying rate), above 1 for bursty trains, below 1 for regular ones,
// and lies in [0, 3]. For a Gamma renewal process with shape kappa the
// expectation is 3/(2 kappa + 1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "spikelv/spike_train.hpp"

namespace spikelv {

struct LvResult {
  double lv = 0.0;
  std::size_t n_spikes = 0;
  std::size_t n_terms = 0;  // n_spikes - 2
};

/// Parameters of a Gamma renewal process: shape kappa and rate xi (events per
/// second, so the mean interval is 1/xi).
struct GammaShape {
  double kappa = 1.0;
  double xi = 1.0;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Single pass over consecutive interval pairs. Throws InvalidArgument
/// ("undefined local variation") with fewer than two intervals.
LvResult lv_from_intervals(std::span<const double> intervals);
LvResult lv_from_intervals(std::span<const std::int64_t> intervals);

/// Streams the times directly without materializing intervals.
LvResult local_variation(std::span<const std::int64_t> times);
LvResult local_variation(const SpikeTrain& train);

/// Expected L_V of a Gamma renewal process, 3/(2 kappa + 1).
/// Throws InvalidArgument for kappa <= 0 or non-finite kappa.
double expected_lv_gamma(double kappa);

/// Inverse of expected_lv_gamma: kappa = (3/lv - 1)/2. lv must be in (0, 3);
/// lv == 3 would give kappa == 0 and is reported as "degenerate shape".
double shape_from_lv(double lv);

/// L_V of the first ceil(N/2) spikes and of the remaining floor(N/2).
/// Throws InvalidArgument ("too short to split") when N < 6.
std::pair<LvResult, LvResult> split_half_lv(const SpikeTrain& train);
std::pair<LvResult, LvResult> split_half_lv(std::span<const std::int64_t> times);

}  // namespace spikelv
