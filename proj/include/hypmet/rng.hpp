#pragma once

#include <cstdint>
#include <string_view>

namespace hypmet {

// Counter-based generator so that per-trial streams can be derived from
// (seed, label, index) and stay identical regardless of thread count or
// platform. std::uniform_real_distribution is implementation-defined, so
// all uniform draws go through next_double() instead.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t s = 0x9e3779b97f4a7c15ull) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [lo,hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

inline std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Stream for trial `index` of the run identified by (seed, label).
inline SplitMix64 stream_for(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    std::uint64_t k = hash_combine(hash_combine(seed, hash_str(label)), index);
    SplitMix64 g(k);
    g.next(); // decorrelate nearby keys
    return g;
}

} // namespace hypmet
