#pragma once

#include <cstdint>

namespace eqk {

// Deterministic splitmix64 generator. Standard-library distributions are
// implementation-defined, so all randomized suites sample through this class
// to keep reports byte-identical across platforms and runs.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by multiply-shift (bound fits in 32 bits here).
    std::uint64_t below(std::uint64_t bound) {
        return (std::uint64_t)(((__uint128_t)next() * bound) >> 64);
    }

    long int_in(long lo, long hi) {   // inclusive range
        return lo + (long)below((std::uint64_t)(hi - lo + 1));
    }

    // Independent stream for case index i of a suite seeded with s.
    static Prng for_case(std::uint64_t suite_seed, std::uint64_t case_index) {
        Prng mix(suite_seed ^ (0x5851f42d4c957f2dull * (case_index + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

} // namespace eqk
