#pragma once
// Counter-based random streams.  A stream is keyed by (seed, stream index);
// its draws do not depend on what other streams did, so per-trial streams
// replay identically under any execution order or thread count.

#include <cstdint>

namespace vcb {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) {
    state_ = mix64(seed + 0x9E3779B97F4A7C15ULL) ^
             mix64(stream * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    return mix64(z);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_unit() < p; }

 private:
  std::uint64_t state_ = 0;
};

}  // namespace vcb
