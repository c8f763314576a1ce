#pragma once

#include <cstdint>

namespace rainbow {

// Deterministic splitmix64 stream. Used instead of <random> distributions
// so that seeded runs produce identical artifacts on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) via rejection.
    int next_below(int bound) {
        std::uint64_t b = static_cast<std::uint64_t>(bound);
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return static_cast<int>(x % b);
    }

    // Bernoulli(p) with p given as numerator over 2^32.
    bool next_chance(std::uint32_t p_num) {
        return static_cast<std::uint32_t>(next_u64() >> 32) < p_num;
    }

    // Derives an independent stream, e.g. one per experiment instance.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
        return r.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace rainbow
