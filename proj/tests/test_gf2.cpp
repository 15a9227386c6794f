#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qdc/gf2.hpp"
#include "testutil.hpp"

using namespace qdc;

TEST_CASE("from_samples dedups and keeps zero rows") {
    SampleSet s{3, {0b101, 0b101, 0b011}};
    const BitMatrix m = from_samples(s);
    CHECK(m.rows() == 2);

    SampleSet z{3, {0}};
    const BitMatrix mz = from_samples(z);
    CHECK(mz.rows() == 1);
    CHECK(mz.row(0) == 0);

    SampleSet empty{3, {}};
    CHECK_THROWS_AS(from_samples(empty), std::invalid_argument);
}

TEST_CASE("solve on the worked 3-bit system") {
    const BitMatrix mat({0b110, 0b011}, 3);
    const SolutionSets sol = solve(mat);
    CHECK(enumerate(sol, 0) == std::vector<uint32_t>{0b000, 0b111});
    CHECK(enumerate(sol, 1) == std::vector<uint32_t>{0b010, 0b101});
    CHECK(enumerate(sol, 0) == testutil::brute_solutions(mat, 0));
    CHECK(enumerate(sol, 1) == testutil::brute_solutions(mat, 1));
}

TEST_CASE("zero rows make the inhomogeneous side empty") {
    const BitMatrix mat({0b000}, 3);
    const SolutionSets sol = solve(mat);
    CHECK(enumerate(sol, 0).size() == 8);
    CHECK(enumerate(sol, 1).empty());
    CHECK_FALSE(sol.particular.has_value());
}

TEST_CASE("empty constraint set: all of F_2^m and empty by convention") {
    const BitMatrix mat(0, 3);
    const SolutionSets sol = solve(mat);
    CHECK(enumerate(sol, 0).size() == 8);
    CHECK(enumerate(sol, 1).empty());
}

TEST_CASE("enumeration cap") {
    const BitMatrix mat(0, 22);  // nullspace dimension 22
    const SolutionSets sol = solve(mat);
    CHECK_THROWS_AS(enumerate(sol, 0, 20), DimensionTooLarge);
    try {
        enumerate(sol, 0, 20);
    } catch (const DimensionTooLarge& e) {
        CHECK(e.dimension() == 22);
        CHECK(e.cap() == 20);
    }
    // an empty A1 needs no enumeration at all
    CHECK(enumerate(sol, 1, 0).empty());
}

TEST_CASE("contains") {
    const BitMatrix mat({0b110, 0b011}, 3);
    const SolutionSets sol = solve(mat);
    CHECK(contains(sol, 0, 0b111));
    CHECK(contains(sol, 0, 0));
    CHECK_FALSE(contains(sol, 0, 0b010));
    CHECK(contains(sol, 1, 0b010));
    CHECK(contains(sol, 1, 0b101));
    CHECK_FALSE(contains(sol, 1, 0b111));

    const SolutionSets none = solve(BitMatrix({0b000}, 3));
    for (uint32_t a = 0; a < 8; ++a) {
        CHECK_FALSE(contains(none, 1, a));
        CHECK(contains(none, 0, a));
    }
}

TEST_CASE("random systems match the brute-force scan") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + int(rng.below(12));
        const std::size_t nrows = rng.below(uint64_t(2 * m) + 1);
        std::vector<uint64_t> rows(nrows);
        for (auto& r : rows) r = rng.below(uint64_t(1) << m);
        const BitMatrix mat(rows, m);
        const SolutionSets sol = solve(mat);

        const auto got0 = enumerate(sol, 0);
        const auto got1 = enumerate(sol, 1);
        CHECK(got0 == testutil::brute_solutions(mat, 0));
        CHECK(got1 == testutil::brute_solutions(mat, 1));

        // rank-nullity: pivot count + nullspace dimension = m
        std::vector<uint64_t> reduced;
        for (uint64_t r : rows) {
            uint64_t cur = r;
            for (uint64_t b : reduced) cur = std::min(cur, cur ^ b);
            if (cur) reduced.push_back(cur);
        }
        CHECK(reduced.size() + sol.basis.size() == std::size_t(m));

        // membership test agrees with enumeration on random probes
        for (int probe = 0; probe < 8; ++probe) {
            const uint32_t a = uint32_t(rng.below(uint64_t(1) << m));
            CHECK(contains(sol, 0, a) == std::binary_search(got0.begin(), got0.end(), a));
            CHECK(contains(sol, 1, a) == std::binary_search(got1.begin(), got1.end(), a));
        }
    }
}

TEST_CASE("closure properties") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + int(rng.below(8));
        std::vector<uint64_t> rows(rng.below(uint64_t(m)) + 1);
        for (auto& r : rows) r = rng.below(uint64_t(1) << m);
        const SolutionSets sol = solve(BitMatrix(rows, m));
        const auto a0 = enumerate(sol, 0);
        const auto a1 = enumerate(sol, 1);
        for (std::size_t i = 0; i < std::min<std::size_t>(a0.size(), 8); ++i)
            for (std::size_t j = 0; j < std::min<std::size_t>(a0.size(), 8); ++j)
                CHECK(contains(sol, 0, a0[i] ^ a0[j]));
        for (std::size_t i = 0; i < std::min<std::size_t>(a1.size(), 8); ++i)
            for (std::size_t j = 0; j < std::min<std::size_t>(a1.size(), 8); ++j)
                CHECK(contains(sol, 0, a1[i] ^ a1[j]));
    }
}
