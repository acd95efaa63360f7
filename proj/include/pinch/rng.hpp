#pragma once

#include <cstdint>
#include <string_view>

namespace pinch {

// Deterministic, platform-independent pseudo-randomness. <random> engines are
// portable but the distributions are not, so draws go through Rng directly.

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t s = a;
    (void)splitmix64(s);
    s ^= b + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() { return splitmix64(state_); }

    /// Uniform-ish draw in [0, n). The modulo bias at our moduli (< 2^32) is
    /// far below anything the resampling policy could notice.
    uint64_t below(uint64_t n) { return next() % n; }

    /// Uniform-ish draw in [lo, hi], inclusive.
    int64_t int_in(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

} // namespace pinch
