#pragma once

#include <cstdint>
#include <vector>

#include "qdc/boolfn.hpp"
#include "qdc/rng.hpp"

namespace qdc {

// Exact measurement distribution of one Bernstein-Vazirani run on f:
// outcome w appears with probability weights[w] / 4^m where
// weights[w] = W(w)^2. The circuit itself is never simulated gate by
// gate; squaring the Walsh spectrum is outcome-equivalent and exact.
struct BvDistribution {
    int m = 0;
    std::vector<uint64_t> weights;
    uint64_t total = 0;            // always 4^m
    std::vector<uint64_t> cum;     // inclusive prefix sums of weights
};

// Multiset of BV outcomes from p runs; duplicates are kept, dedup happens
// in the solver.
struct SampleSet {
    int m = 0;
    std::vector<uint32_t> samples;

    std::size_t p() const { return samples.size(); }
};

BvDistribution bv_distribution(const BooleanComponent& f);

// One exact draw: a uniform integer in [0, 4^m) walked against the
// cumulative integer weights. No floating point is involved anywhere.
uint32_t bv_sample(const BvDistribution& dist, Rng& rng);

// p independent draws (p >= 1, else std::invalid_argument).
SampleSet bv_batch(const BooleanComponent& f, std::size_t p, Rng& rng);

}  // namespace qdc
