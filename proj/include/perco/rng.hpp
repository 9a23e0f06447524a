#pragma once

#include <cstdint>

namespace perco {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** generator, seeded through splitmix64. All randomness in the
/// project flows through this class so results are bit-reproducible across
/// platforms. Distinct purposes (graph generation, percolation runs, ...)
/// draw from independent child streams created with split().
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// uniform in [0,1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// uniform in (0,1]
    double next_unit_positive() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// uniform in [0,bound), unbiased via rejection
    uint64_t next_below(uint64_t bound) {
        const uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
        for (;;) {
            uint64_t v = next_u64();
            if (v >= threshold) return v % bound;
        }
    }

    /// independent child stream; derived from the original seed and the tag,
    /// not from consumed state, so split(k) is stable no matter how much the
    /// parent has been used
    Rng split(uint64_t stream_tag) const {
        uint64_t sm = seed_ ^ (0x9e3779b97f4a7c15ULL + stream_tag * 0xd1342543de82ef95ULL);
        splitmix64(sm);
        return Rng(splitmix64(sm));
    }

    uint64_t seed() const { return seed_; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
    uint64_t seed_;
};

}  // namespace perco
