#pragma once

#include <cstdint>

namespace otrid {

// splitmix64: tiny deterministic generator, identical across platforms.
// Fixed seeds make every sampled table / triple reproducible bit for bit.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }

    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

}  // namespace otrid
