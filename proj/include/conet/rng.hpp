// SplitMix64 generator with derived substreams.
//
// Everything random in this project flows through this generator so that
// corpora and reports are reproducible bit-for-bit across platforms and
// across sequential/parallel generation. Substreams are obtained by
// hashing (seed, index) into a fresh starting state, so substream i and
// substream j start at unrelated points of the orbit.

#pragma once

#include <cstdint>

namespace conet {

// SplitMix64 output finalizer; a 64-bit avalanche bijection.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        return mix64(state_ += 0x9E3779B97F4A7C15ULL);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

private:
    std::uint64_t state_;
};

// Independent substream for item `index` under master seed `seed`.
// Used per document so that generating documents in parallel and
// concatenating equals generating them sequentially.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL)));
}

} // namespace conet
