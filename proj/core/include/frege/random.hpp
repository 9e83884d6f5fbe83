#pragma once

#include <cstdint>

namespace frege {

/// SplitMix64. Used instead of <random> engines/distributions so that every
/// sampled instance is a platform-independent, thread-count-independent
/// function of (seed, counter).
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], unbiased via rejection.
  constexpr std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1; // hi >= lo; range 0 means full 2^64
    if (range == 0) return next();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + v % range;
  }

private:
  std::uint64_t state_;
};

/// Independent stream for the index-th instance of a seeded experiment.
/// Mixing the index through one SplitMix64 round decorrelates neighbours.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
  return SplitMix64(mixer.next());
}

} // namespace frege
