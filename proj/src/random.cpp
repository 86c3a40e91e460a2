#include "spikelv/random.hpp"

#include <cmath>
#include <numbers>

namespace spikelv {

namespace {

__extension__ using Uint128 = unsigned __int128;

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) noexcept {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      ctr_{0, 0, static_cast<std::uint32_t>(stream),
           static_cast<std::uint32_t>(stream >> 32)} {}

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

void Philox4x32::refill() noexcept {
  buf_ = block(ctr_, key_);
  // 64-bit block index in the low words; the high words hold the stream id.
  if (++ctr_[0] == 0) ++ctr_[1];
  pos_ = 0;
}

Philox4x32::result_type Philox4x32::operator()() noexcept {
  if (pos_ == 4) refill();
  return buf_[pos_++];
}

std::uint64_t Philox4x32::next_u64() noexcept {
  const std::uint64_t hi = (*this)();
  const std::uint64_t lo = (*this)();
  return (hi << 32) | lo;
}

double uniform01(Philox4x32& rng) noexcept {
  return static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53;
}

double uniform_open01(Philox4x32& rng) noexcept {
  return (static_cast<double>(rng.next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t uniform_below(Philox4x32& rng, std::uint64_t bound) noexcept {
  std::uint64_t x = rng.next_u64();
  Uint128 m = static_cast<Uint128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng.next_u64();
      m = static_cast<Uint128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double exponential(Philox4x32& rng, double rate) noexcept {
  return -std::log(uniform_open01(rng)) / rate;
}

double standard_normal(Philox4x32& rng) noexcept {
  const double u1 = uniform_open01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double standard_gamma(Philox4x32& rng, double shape) noexcept {
  if (shape < 1.0) {
    const double g = standard_gamma(rng, shape + 1.0);
    return g * std::pow(uniform_open01(rng), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open01(rng);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept {
  return splitmix64(seed ^ splitmix64(fnv1a64(label)));
}

}  // namespace spikelv
