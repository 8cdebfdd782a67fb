#pragma once

#include <cstdint>
#include <limits>

namespace benlab {

/// SplitMix64 (Steele, Lea & Flood 2014). Output is fully specified by the
/// algorithm, so seeded runs reproduce bit-for-bit on any platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  /// Independent stream for element `index` of a run seeded with `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + 0x632BE59BD9B4E019ULL)));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform double in (lo, hi].
  double uniform_left_open(double lo, double hi) {
    return hi - (hi - lo) * uniform01();
  }

  /// Uniform integer in [0, n], n < 2^63. Bias is below 2^-40 for the
  /// population sizes used here.
  std::uint64_t uniform_int_inclusive(std::uint64_t n) {
    const auto k =
        static_cast<std::uint64_t>(uniform01() * static_cast<double>(n + 1));
    return k > n ? n : k;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace benlab
