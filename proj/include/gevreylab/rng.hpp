#pragma once

#include <cstdint>

namespace gvl::rng {

// SplitMix64. Sub-streams are derived from (seed, counter) so that sample i
// of a run is reproducible independent of evaluation order or threading.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (counter + 1)));
    return g.next();
}

inline SplitMix64 stream(std::uint64_t seed, std::uint64_t counter) {
    return SplitMix64(derive(seed, counter));
}

}  // namespace gvl::rng
