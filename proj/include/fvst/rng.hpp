#pragma once

#include <cstdint>

namespace fvst {

// SplitMix64 (Steele, Lea & Flood 2014). Fixed algorithm, so a given seed
// produces the identical stream on every platform; all randomness in the
// library flows through explicit instances of this generator.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // One fair coin per call; uses the high bit of one draw.
    bool coin() { return next() >> 63; }

    // Uniform value in [0, bound), bound > 0. Rejection keeps it unbiased.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    uint64_t state_;
};

}  // namespace fvst
