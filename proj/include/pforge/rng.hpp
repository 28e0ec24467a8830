#pragma once

#include <cstdint>

namespace pforge {

// SplitMix64 generator (fixed 64-bit constants, no platform-dependent
// state), so every seeded run reproduces bit-identical sequences.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection; bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Independent substream `index` of a master seed. The substream state is
// mix(seed) + (index + 1) * golden-ratio increment, where mix is one
// SplitMix64 step, so trials can run in any order (or in parallel) and
// still see the same values.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed);
    return SplitMix64(mixer.next() + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace pforge
