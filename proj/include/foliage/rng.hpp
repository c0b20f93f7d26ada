#pragma once

#include <cstdint>

namespace foliage {

/// SplitMix64 (Steele/Lea/Vigna): one additive step plus an avalanche mix per
/// draw. Used for every random decision in the library because it is trivially
/// splittable — stream(i) derives an independent deterministic generator for
/// sub-task i, so Monte Carlo results do not depend on thread count.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent generator for sub-task `index`, derived from the original
    /// seed only (not from draws made so far).
    SplitMix64 stream(uint64_t index) const {
        return SplitMix64(mix(seed_of_stream(index)));
    }

    /// True with probability p; p is quantized to multiples of 2^-53.
    bool bernoulli(double p) {
        return (next() >> 11) < static_cast<uint64_t>(p * 9007199254740992.0);
    }

    /// Uniform in [0, 1).
    double next_unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

    /// Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
    /// bounds used here (all far below 2^32).
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t seed_of_stream(uint64_t index) const {
        return state_ + (index + 1) * 0x9e3779b97f4a7c15ULL;
    }
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

} // namespace foliage
