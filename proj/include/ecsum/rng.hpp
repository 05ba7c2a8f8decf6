#pragma once

#include <array>
#include <cstdint>

namespace ecsum {

// xoshiro256** seeded through splitmix64. Deterministic across platforms,
// which the seeded test suites and the CLI's byte-identical-report contract
// rely on (std::uniform_int_distribution is implementation-defined).
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) {
            word = splitmix64(sm);
        }
    }

    uint64_t next() {
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

    // Unbiased integer in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (-bound) % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    bool flip() { return (next() >> 63) != 0; }

    // Independent stream for one trial of a suite, so any failing trial can
    // be replayed from (seed, trial) alone.
    static Rng for_trial(uint64_t seed, uint64_t trial) {
        uint64_t sm = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
        return Rng(splitmix64(sm));
    }

  private:
    static uint64_t splitmix64(uint64_t& state) {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_{};
};

}  // namespace ecsum
