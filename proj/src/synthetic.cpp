#include "spikelv/synthetic.hpp"

#include <cmath>
#include <exception>
#include <numbers>

#include "spikelv/error.hpp"

namespace spikelv {

namespace {

void check_span(TimeSpan span) {
  if (!(span.end > span.start) || !std::isfinite(span.start) || !std::isfinite(span.end)) {
    throw InvalidArgument("generator window must satisfy start < end");
  }
}

void check_rate(double xi, double length) {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw InvalidArgument("rate must be positive");
  if (xi * length > kMaxExpectedEvents) {
    throw InvalidArgument("expected event count exceeds generator limit");
  }
}

void check_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidArgument("gamma shape must be positive");
  }
}

// Appends an event `gap` after the previous one (or after the origin for the
// first event). Returns false once the event falls past `end`.
class TrainBuilder {
 public:
  TrainBuilder(double origin, double end) : t_(origin), end_(end) {}

  bool push(double gap) {
    t_ += gap;
    if (t_ >= end_) return false;
    if (train_.n_events == 0) {
      train_.first = t_;
    } else {
      train_.intervals.push_back(gap);
    }
    ++train_.n_events;
    return true;
  }

  ContinuousTrain take() && { return std::move(train_); }

 private:
  ContinuousTrain train_;
  double t_;
  double end_;
};

double gamma_gap(Philox4x32& rng, double kappa, double scale) {
  double g;
  do {
    g = standard_gamma(rng, kappa) * scale;
  } while (!(g > 0.0));
  return g;
}

}  // namespace

std::vector<double> ContinuousTrain::times() const {
  std::vector<double> out;
  if (n_events == 0) return out;
  out.reserve(n_events);
  double t = first;
  out.push_back(t);
  for (double g : intervals) out.push_back(t += g);
  return out;
}

RateFunction RateFunction::constant(double xi) {
  return {[xi](double) { return xi; }, xi};
}

RateFunction RateFunction::sinusoidal(double mean, double amplitude, double period,
                                      double phase) {
  if (!(mean > 0.0) || amplitude < 0.0 || amplitude > 1.0 || !(period > 0.0)) {
    throw InvalidArgument("sinusoidal rate needs mean > 0, amplitude in [0,1], period > 0");
  }
  const double omega = 2.0 * std::numbers::pi / period;
  return {[=](double t) { return mean * (1.0 + amplitude * std::sin(omega * (t - phase))); },
          mean * (1.0 + amplitude)};
}

ContinuousTrain gen_poisson(double xi, TimeSpan span, std::uint64_t seed) {
  check_span(span);
  check_rate(xi, span.length());
  Philox4x32 rng(seed);
  TrainBuilder b(span.start, span.end);
  while (b.push(exponential(rng, xi))) {
  }
  return std::move(b).take();
}

ContinuousTrain gen_nonstationary_poisson(const RateFunction& rate, TimeSpan span,
                                          std::uint64_t seed) {
  check_span(span);
  check_rate(rate.max_rate, span.length());
  Philox4x32 rng(seed);
  ContinuousTrain train;
  double t = span.start;
  double since_kept = 0.0;
  for (;;) {
    const double g = exponential(rng, rate.max_rate);
    t += g;
    since_kept += g;
    if (t >= span.end) break;
    const double r = rate.rate(t);
    if (!(r >= 0.0) || r > rate.max_rate) {
      throw DataError("rate function leaves [0, max_rate] at t=" + std::to_string(t));
    }
    if (uniform01(rng) * rate.max_rate < r) {
      if (train.n_events == 0) {
        train.first = t;
      } else {
        train.intervals.push_back(since_kept);
      }
      ++train.n_events;
      since_kept = 0.0;
    }
  }
  return train;
}

ContinuousTrain gen_gamma_renewal(double xi, double kappa, TimeSpan span, std::uint64_t seed) {
  check_span(span);
  check_rate(xi, span.length());
  check_kappa(kappa);
  Philox4x32 rng(seed);
  const double scale = 1.0 / (kappa * xi);
  TrainBuilder b(span.start, span.end);
  while (b.push(gamma_gap(rng, kappa, scale))) {
  }
  return std::move(b).take();
}

ContinuousTrain gen_poisson_n(double xi, std::size_t n, std::uint64_t seed) {
  check_rate(xi, 0.0);
  if (static_cast<double>(n) > kMaxExpectedEvents) {
    throw InvalidArgument("event count exceeds generator limit");
  }
  Philox4x32 rng(seed);
  ContinuousTrain train;
  train.n_events = n;
  if (n > 1) train.intervals.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) train.intervals.push_back(exponential(rng, xi));
  return train;
}

ContinuousTrain gen_gamma_renewal_n(double xi, double kappa, std::size_t n, std::uint64_t seed) {
  check_rate(xi, 0.0);
  check_kappa(kappa);
  if (static_cast<double>(n) > kMaxExpectedEvents) {
    throw InvalidArgument("event count exceeds generator limit");
  }
  Philox4x32 rng(seed);
  const double scale = 1.0 / (kappa * xi);
  ContinuousTrain train;
  train.n_events = n;
  if (n > 1) train.intervals.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) train.intervals.push_back(gamma_gap(rng, kappa, scale));
  return train;
}

double gamma_interval_density(double dt, double xi, double kappa) {
  check_kappa(kappa);
  if (!(xi > 0.0)) throw InvalidArgument("rate must be positive");
  if (dt <= 0.0) return 0.0;
  const double rate = xi * kappa;
  return std::exp(kappa * std::log(rate) + (kappa - 1.0) * std::log(dt) - rate * dt -
                  std::lgamma(kappa));
}

std::vector<std::int64_t> event_seconds(const ContinuousTrain& train) {
  std::vector<std::int64_t> out;
  if (train.n_events == 0) return out;
  out.reserve(train.n_events);
  double t = train.first;
  out.push_back(static_cast<std::int64_t>(std::floor(t)));
  for (double g : train.intervals) {
    t += g;
    out.push_back(static_cast<std::int64_t>(std::floor(t)));
  }
  return out;
}

SpikeTrain quantize(const ContinuousTrain& train, std::string tag) {
  const auto secs = event_seconds(train);
  std::vector<std::int64_t> times;
  std::vector<std::uint32_t> counts;
  for (auto s : secs) {
    if (!times.empty() && times.back() == s) {
      ++counts.back();
    } else {
      times.push_back(s);
      counts.push_back(1);
    }
  }
  return SpikeTrain(std::move(tag), std::move(times), std::move(counts));
}

std::uint64_t discrete_power_law(Philox4x32& rng, double exponent, std::uint64_t k_max) {
  if (!(exponent > 1.0)) throw InvalidArgument("power-law exponent must exceed 1");
  if (k_max < 1) throw InvalidArgument("power-law cutoff must be >= 1");
  const double am1 = exponent - 1.0;
  const double b = std::pow(2.0, am1);
  for (;;) {
    const double u = uniform_open01(rng);
    const double v = uniform01(rng);
    const double x = std::floor(std::pow(u, -1.0 / am1));
    if (!(x < 9.0e18) || x > static_cast<double>(k_max)) continue;
    const double t = std::pow(1.0 + 1.0 / x, am1);
    if (v * x * (t - 1.0) / (b - 1.0) <= t / b) return static_cast<std::uint64_t>(x);
  }
}

std::string to_string(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::kPoisson:
      return "poisson";
    case ProcessKind::kGamma:
      return "gamma";
    case ProcessKind::kSinusoidal:
      return "sinusoidal";
  }
  return "unknown";
}

ProcessKind parse_process_kind(std::string_view name) {
  if (name == "poisson") return ProcessKind::kPoisson;
  if (name == "gamma") return ProcessKind::kGamma;
  if (name == "sinusoidal") return ProcessKind::kSinusoidal;
  throw InvalidArgument("unknown process '" + std::string(name) + "'");
}

ContinuousTrain generate(const TagSpec& spec, TimeSpan span) {
  switch (spec.kind) {
    case ProcessKind::kPoisson:
      return gen_poisson(spec.xi, span, spec.seed);
    case ProcessKind::kGamma:
      return gen_gamma_renewal(spec.xi, spec.kappa, span, spec.seed);
    case ProcessKind::kSinusoidal:
      return gen_nonstationary_poisson(
          RateFunction::sinusoidal(spec.xi, spec.amplitude, spec.period), span, spec.seed);
  }
  throw InvalidArgument("unknown process kind");
}

std::vector<ContinuousTrain> generate_all(const std::vector<TagSpec>& specs, TimeSpan span) {
  std::vector<ContinuousTrain> out(specs.size());
  const auto count = static_cast<std::int64_t>(specs.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = generate(specs[static_cast<std::size_t>(k)], span);
    } catch (...) {
#pragma omp critical(spikelv_generate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Corpus quantized_corpus(const std::vector<TagSpec>& specs,
                        const std::vector<ContinuousTrain>& trains, TimeSpan span) {
  if (specs.size() != trains.size()) throw InvalidArgument("specs/trains size mismatch");
  check_span(span);
  std::vector<SpikeTrain> out;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    if (trains[k].n_events == 0) continue;
    out.push_back(quantize(trains[k], specs[k].tag));
  }
  const Window window{static_cast<std::int64_t>(std::floor(span.start)),
                      static_cast<std::int64_t>(std::ceil(span.end)) - 1};
  return Corpus(std::move(out), window);
}

}  // namespace spikelv
