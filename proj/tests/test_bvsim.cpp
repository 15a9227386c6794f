#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qdc/bvsim.hpp"
#include "testutil.hpp"

using namespace qdc;

TEST_CASE("distribution of a linear component is a point mass") {
    const BvDistribution d = bv_distribution(linear_component(3, 5, 0));
    for (uint32_t w = 0; w < 8; ++w) CHECK(d.weights[w] == (w == 5 ? 64u : 0u));
    CHECK(d.total == 64);
}

TEST_CASE("distribution of a constant function sits at zero") {
    BooleanComponent one{2, {1, 1, 1, 1}};
    const BvDistribution d = bv_distribution(one);
    CHECK(d.weights[0] == 16);
    for (uint32_t w = 1; w < 4; ++w) CHECK(d.weights[w] == 0);
}

TEST_CASE("bent distribution is uniform") {
    const TruthTable bent = fixture_sbox("bent4");
    const BvDistribution d = bv_distribution(component(bent, 1));
    for (uint32_t w = 0; w < 16; ++w) CHECK(d.weights[w] == 16);
}

TEST_CASE("weights always sum to 4^m") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + int(rng.below(10));
        BooleanComponent f;
        f.m = m;
        f.bits.resize(std::size_t(1) << m);
        for (auto& b : f.bits) b = uint8_t(rng.below(2));
        CHECK(bv_distribution(f).total == uint64_t(1) << (2 * m));
    }
}

TEST_CASE("sampling a linear component always returns the coefficients") {
    const BvDistribution d = bv_distribution(linear_component(4, 11, 1));
    for (uint64_t seed : {0, 1, 2, 3}) {
        Rng rng(seed);
        for (int i = 0; i < 50; ++i) CHECK(bv_sample(d, rng) == 11);
    }
}

TEST_CASE("sampling a constant component always returns zero") {
    BooleanComponent zero{3, std::vector<uint8_t>(8, 0)};
    const BvDistribution d = bv_distribution(zero);
    Rng rng(5);
    for (int i = 0; i < 50; ++i) CHECK(bv_sample(d, rng) == 0);
}

TEST_CASE("batches are deterministic per seed and reject p = 0") {
    const BooleanComponent f = component(fixture_sbox("ls4"), 2);
    Rng r1(1), r2(1), r3(2);
    const SampleSet a = bv_batch(f, 64, r1);
    const SampleSet b = bv_batch(f, 64, r2);
    CHECK(a.samples == b.samples);
    CHECK(a.p() == 64);
    CHECK(bv_batch(f, 64, r3).samples != a.samples);
    Rng r4(1);
    CHECK_THROWS_AS(bv_batch(f, 0, r4), std::invalid_argument);
}

TEST_CASE("impossible outcomes never appear") {
    const TruthTable F = fixture_sbox("present4");
    for (int j = 1; j <= 4; ++j) {
        const BvDistribution d = bv_distribution(component(F, j));
        Rng rng(uint64_t(j));
        for (int i = 0; i < 2000; ++i) CHECK(d.weights[bv_sample(d, rng)] > 0);
    }
}

TEST_CASE("bent sampler total-variation distance") {
    const BvDistribution d = bv_distribution(component(fixture_sbox("bent4"), 1));
    Rng rng(17);
    std::map<uint32_t, std::size_t> counts;
    const std::size_t draws = 20000;
    for (std::size_t i = 0; i < draws; ++i) ++counts[bv_sample(d, rng)];
    CHECK(testutil::tv_distance(counts, draws, d.weights, d.total) < 0.05);
}

TEST_CASE("chi-square fit at 100k draws") {
    // bent m=4: 16 live bins, 15 degrees of freedom
    {
        const BvDistribution d = bv_distribution(component(fixture_sbox("bent4"), 1));
        Rng rng(23);
        std::vector<std::size_t> counts(16, 0);
        const std::size_t draws = 100000;
        for (std::size_t i = 0; i < draws; ++i) ++counts[bv_sample(d, rng)];
        double chi2 = 0.0;
        for (uint32_t w = 0; w < 16; ++w) {
            const double expect = double(draws) * double(d.weights[w]) / double(d.total);
            chi2 += (counts[w] - expect) * (counts[w] - expect) / expect;
        }
        CHECK(chi2 < 37.697);  // 99.9% quantile, 15 dof
    }
    // fixed random m=6 function, live bins counted from the exact weights
    {
        BooleanComponent f;
        f.m = 6;
        f.bits.resize(64);
        Rng gen(555);
        for (auto& b : f.bits) b = uint8_t(gen.below(2));
        const BvDistribution d = bv_distribution(f);
        int live = 0;
        for (uint64_t w : d.weights) live += w > 0;
        Rng rng(29);
        std::vector<std::size_t> counts(64, 0);
        const std::size_t draws = 100000;
        for (std::size_t i = 0; i < draws; ++i) ++counts[bv_sample(d, rng)];
        double chi2 = 0.0;
        for (uint32_t w = 0; w < 64; ++w) {
            if (d.weights[w] == 0) {
                CHECK(counts[w] == 0);
                continue;
            }
            const double expect = double(draws) * double(d.weights[w]) / double(d.total);
            chi2 += (counts[w] - expect) * (counts[w] - expect) / expect;
        }
        CHECK(chi2 < testutil::chi2_quantile_999(live - 1));
    }
}
