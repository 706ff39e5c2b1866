#pragma once

#include <cstdint>

namespace ied {

// SplitMix64. Chosen over std::mt19937_64 so that the draw stream is bit-identical
// across platforms and standard library implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n), n > 0, by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }

    // Uniform value in [1, n].
    int in(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))) + 1; }

  private:
    std::uint64_t state_;
};

}  // namespace ied
