#pragma once

#include <cstdint>

namespace artmod {

// SplitMix64. Deterministic across platforms, unlike the standard library
// distributions, which matters for seeded reports and golden files.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi].
    int in_range(int lo, int hi) {
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace artmod
