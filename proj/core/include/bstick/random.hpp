#pragma once

#include <cstdint>
#include <string_view>

namespace bstick {

/// Identifier recorded with every estimate. Bump the suffix whenever the
/// generator, the chunk key derivation or the per-trial draw order changes.
inline constexpr std::string_view kGeneratorId = "xoshiro256ss-splitmix64-chunk-v1";

/// SplitMix64 finalizer (Steele, Lea, Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna). Fully specified, so streams are
/// identical on every platform and standard library.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 init(seed);
    for (auto& word : s_) word = init.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  constexpr result_type operator()() { return next(); }

  constexpr std::uint64_t next() {
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

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double next_uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4]{};
};

/// Generator for one chunk of a simulation. The stream depends only on
/// (seed, chunk_index): key = mix64(mix64(seed) ^ chunk_index), expanded
/// into xoshiro state by SplitMix64.
constexpr Xoshiro256StarStar chunk_generator(std::uint64_t seed, std::uint64_t chunk_index) {
  return Xoshiro256StarStar(mix64(mix64(seed) ^ chunk_index));
}

}  // namespace bstick
