#pragma once

// Counter-based random numbers.
//
// Every stochastic stage of the toolkit draws from Philox4x32-10 (Salmon et
// al., "Parallel random numbers: as easy as 1, 2, 3", SC'11). The generator
// is keyed by a 64-bit seed; independent streams are obtained by deriving a
// sub-seed from (seed, label) with a fixed hash, so results never depend on
// thread scheduling or draw order across trains.
//
// Variate transforms (uniform, exponential, normal, gamma, bounded integers)
// are implemented here rather than via <random> distributions, whose output
// is implementation-defined and would break cross-platform reproducibility.

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace spikelv {

/// Identifier recorded in output metadata for every seeded artifact.
inline constexpr std::string_view kGeneratorId = "philox4x32-10";

class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;
  std::uint64_t next_u64() noexcept;

  /// The raw bijection: ten rounds of Philox on one counter block.
  static Counter block(Counter ctr, Key key) noexcept;

 private:
  void refill() noexcept;

  Key key_;
  Counter ctr_;
  Counter buf_{};
  unsigned pos_ = 4;
};

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Philox4x32& rng) noexcept;

/// Uniform double in (0, 1); never returns 0, safe under log().
double uniform_open01(Philox4x32& rng) noexcept;

/// Uniform integer in [0, bound). bound must be > 0. Lemire's method, unbiased.
std::uint64_t uniform_below(Philox4x32& rng, std::uint64_t bound) noexcept;

/// Exponential with the given rate.
double exponential(Philox4x32& rng, double rate) noexcept;

/// Standard normal (Box-Muller, one variate per call).
double standard_normal(Philox4x32& rng) noexcept;

/// Gamma(shape, scale=1) via Marsaglia-Tsang; shape < 1 is boosted with
/// G(a) = G(a + 1) * U^(1/a). Valid for every shape > 0.
double standard_gamma(Philox4x32& rng, double shape) noexcept;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Per-label sub-seed: splitmix64(seed ^ splitmix64(fnv1a64(label))).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept;

}  // namespace spikelv
