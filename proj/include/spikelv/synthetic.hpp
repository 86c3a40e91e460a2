#pragma once

// Ground-truth point-process generators.
//
// Trains are produced in continuous time and stored as the first event time
// plus strictly positive inter-event intervals; absolute times are only
// formed when quantizing onto the one-second grid.

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "spikelv/random.hpp"
#include "spikelv/spike_train.hpp"

namespace spikelv {

/// Half-open continuous window [start, end) in seconds.
struct TimeSpan {
  double start = 0.0;
  double end = 0.0;
  double length() const noexcept { return end - start; }
};

struct ContinuousTrain {
  std::size_t n_events = 0;
  double first = 0.0;             // time of the first event when n_events > 0
  std::vector<double> intervals;  // n_events - 1 gaps, all > 0

  std::vector<double> times() const;
};

/// Time-dependent rate xi(t) with a declared upper bound.
struct RateFunction {
  std::function<double(double)> rate;
  double max_rate = 0.0;

  static RateFunction constant(double xi);
  /// mean * (1 + amplitude * sin(2 pi (t - phase) / period)), amplitude in [0, 1].
  static RateFunction sinusoidal(double mean, double amplitude, double period,
                                 double phase = 0.0);
};

/// Generators refuse requests whose expected event count exceeds this.
inline constexpr double kMaxExpectedEvents = 1e8;

/// Stationary Poisson process at rate xi on the span.
ContinuousTrain gen_poisson(double xi, TimeSpan span, std::uint64_t seed);

/// Lewis-Shedler thinning: candidates at max_rate, each kept with probability
/// rate(t)/max_rate. Throws DataError if rate(t) leaves [0, max_rate].
ContinuousTrain gen_nonstationary_poisson(const RateFunction& rate, TimeSpan span,
                                          std::uint64_t seed);

/// Renewal process with Gamma(shape kappa, rate kappa*xi) intervals, i.e.
/// density (xi k)^k dt^(k-1) exp(-xi k dt) / Gamma(k) and mean interval 1/xi.
/// The process is started at span.start, so the first event is one interval in.
ContinuousTrain gen_gamma_renewal(double xi, double kappa, TimeSpan span, std::uint64_t seed);

/// Fixed-size variants used by Monte-Carlo studies: exactly n events, first at 0.
ContinuousTrain gen_poisson_n(double xi, std::size_t n, std::uint64_t seed);
ContinuousTrain gen_gamma_renewal_n(double xi, double kappa, std::size_t n, std::uint64_t seed);

/// The Gamma interval density above.
double gamma_interval_density(double dt, double xi, double kappa);

/// Floors every event onto the integer-second grid (one entry per event,
/// non-decreasing). Used to emit raw event lines.
std::vector<std::int64_t> event_seconds(const ContinuousTrain& train);

/// Event seconds collapsed into a deduplicated spike train.
SpikeTrain quantize(const ContinuousTrain& train, std::string tag);

inline constexpr std::uint64_t kUnboundedDraw = std::numeric_limits<std::uint64_t>::max();

/// Draw from the discrete power law P(k) ~ k^-exponent, k >= 1 (exponent > 1),
/// by Devroye's rejection method; values above k_max are redrawn.
std::uint64_t discrete_power_law(Philox4x32& rng, double exponent,
                                 std::uint64_t k_max = kUnboundedDraw);

enum class ProcessKind { kPoisson, kGamma, kSinusoidal };

/// Ground truth for one synthetic tag.
struct TagSpec {
  std::string tag;
  ProcessKind kind = ProcessKind::kPoisson;
  double xi = 1.0;
  double kappa = 1.0;      // gamma only
  double amplitude = 0.0;  // sinusoidal only
  double period = 86400.0; // sinusoidal only
  std::uint64_t seed = 0;
};

std::string to_string(ProcessKind kind);
ProcessKind parse_process_kind(std::string_view name);

ContinuousTrain generate(const TagSpec& spec, TimeSpan span);

/// Generates every tag in parallel; output order matches specs.
std::vector<ContinuousTrain> generate_all(const std::vector<TagSpec>& specs, TimeSpan span);

/// Quantized corpus over the integer window [floor(start), ceil(end) - 1].
/// Tags whose train is empty are omitted.
Corpus quantized_corpus(const std::vector<TagSpec>& specs,
                        const std::vector<ContinuousTrain>& trains, TimeSpan span);

}  // namespace spikelv
