#pragma once
#include <cstdint>

namespace gbm {

// splitmix64: the finalizer is a bijection on 64-bit words, so distinct
// inputs give distinct streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Trial seeds: seed = splitmix64(splitmix64(base ^ GOLDEN*(a+1)) ^ (b+1)).
// Documented in the README; trials are independent and reorderable.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = splitmix64(base ^ (0x9E3779B97F4A7C15ULL * (a + 1)));
    return splitmix64(s ^ (b + 1));
}

// xorshift-style engine seeded via splitmix64. Used instead of std
// distributions so outputs are bit-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        s_[0] = splitmix64(seed);
        s_[1] = splitmix64(s_[0]);
    }

    std::uint64_t next_u64() {
        // xoroshiro128+
        std::uint64_t a = s_[0], b = s_[1];
        std::uint64_t r = a + b;
        b ^= a;
        s_[0] = ((a << 55) | (a >> 9)) ^ b ^ (b << 14);
        s_[1] = (b << 36) | (b >> 28);
        return r;
    }

    // uniform double in [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t s_[2];
};

} // namespace gbm
