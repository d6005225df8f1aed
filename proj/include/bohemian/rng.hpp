#pragma once

// Counter-based pseudo-random stream keyed by (seed, sample index).  Each
// sample owns an independent stream, so sharded Monte Carlo runs are
// bit-reproducible for a given (seed, count) regardless of partitioning.

#include <cstdint>

namespace bohemian {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t sample_index)
        : state_(splitmix64(seed ^ (0x6a09e667f3bcc909ULL + sample_index * 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // unbiased draw from [0, bound) by rejection
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ULL / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace bohemian
