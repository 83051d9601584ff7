#pragma once

// Portable pseudo-random streams. Everything seeded in this library goes
// through these two generators so that a (seed, parameters) pair reproduces the
// same chains and the same Monte Carlo estimates in any implementation:
//
//   SplitMix64   (Steele, Lea, Flood 2014) seeds and derives sub-streams.
//   xoshiro256** (Blackman, Vigna 2018) produces the draws.
//
// uniform() maps the top 53 bits to [0, 1) exactly as (x >> 11) * 2^-53.

#include <array>
#include <cstdint>

namespace trajent {

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  /// Independent stream number `index` under `master_seed`; used to give each
  /// Monte Carlo sample its own generator.
  static constexpr Xoshiro256 substream(std::uint64_t master_seed, std::uint64_t index) noexcept {
    return Xoshiro256(SplitMix64::mix(master_seed ^ SplitMix64::mix(index + 0x9E3779B97F4A7C15ULL)));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

  constexpr result_type operator()() noexcept { return next(); }

  constexpr std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by Lemire's multiply-shift; the slight bias
  /// (< bound / 2^64) is irrelevant for the small bounds used here.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace trajent
