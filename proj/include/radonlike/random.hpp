#pragma once

#include <cstdint>

namespace radonlike {

/// Counter-based generator: output i of stream s is a pure function of
/// (seed, s, i), so per-trial streams are reproducible in any order.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint64_t next() { return mix(seed_ ^ mix(stream_ + 0x632be59bd9b4e019ULL) ^ (counter_++ * 0x9e3779b97f4a7c15ULL)); }

  /// Uniform on [lo, hi] by rejection; platform independent.
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do { x = next(); } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  CounterRng split(std::uint64_t stream) const { return CounterRng(next_seed(), stream); }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t next_seed() const { return mix(seed_ + 0x1234567ULL * (stream_ + 1)); }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace radonlike
