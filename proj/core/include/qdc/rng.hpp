#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace qdc {

// splitmix64 finalizer, used to derive independent stream seeds.
constexpr uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Reproducible random stream around std::mt19937_64.
//
// Bounded draws use bitmask rejection instead of
// std::uniform_int_distribution, whose output is implementation-defined;
// every value this class produces is pinned by the C++ standard, so runs
// replay bit-identically across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next() { return gen_(); }

    // Uniform draw in [0, bound). bound == 0 is treated as bound == 1.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        const uint64_t mask = ~uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            const uint64_t r = gen_() & mask;
            if (r < bound) return r;
        }
    }

    // Child stream identified by (seed, stream). Depends only on the
    // original seed, not on how much of this stream was consumed, so
    // per-trial streams are independent of scheduling.
    Rng derive(uint64_t stream) const { return Rng(mix64(seed_ ^ mix64(stream))); }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace qdc
