#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <set>

#include "qdc/differential.hpp"
#include "qdc/oracle.hpp"
#include "testutil.hpp"

using namespace qdc;

TEST_CASE("choose_p follows the max rule") {
    // defaults at m = n = 4: c2 = 1 + ln(4)/2, p = max{8, ceil(c2 * 4 * 16)}
    const double c2 = 1.0 + std::log(4.0) / 2.0;
    const uint64_t expected = uint64_t(std::ceil(c2 * 4.0 * 16.0));
    CHECK(expected == 109);
    CHECK(choose_p(4, 4, {}) == 109);

    ParamConfig with_override;
    with_override.p_override = 64;
    CHECK(choose_p(8, 1, with_override) == 64);

    // for wide inputs the c*m branch wins
    ParamConfig narrow;
    narrow.c2 = 1.0;
    CHECK(choose_p(100, 1, narrow) == 200);
}

TEST_CASE("algorithm1 on an invertible linear map gives exact hyperplanes") {
    const TruthTable lin = fixture_sbox("linear4");
    // row vector of coordinate j: r_j[i] = bit j of lin(e_i)
    uint32_t rows[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if ((lin(uint32_t(1) << i) >> j) & 1) rows[j] |= uint32_t(1) << i;

    const auto sets = algorithm1(lin, 20, Rng(9));
    for (int j = 0; j < 4; ++j) {
        for (uint32_t a = 0; a < 16; ++a) {
            CHECK(contains(sets[j], 0, a) == (parity(rows[j] & a) == 0));
            CHECK(contains(sets[j], 1, a) == (parity(rows[j] & a) == 1));
        }
    }
}

TEST_CASE("a constant first coordinate leaves its homogeneous set full") {
    // bit 0 constant zero, other bits arbitrary
    std::vector<uint32_t> table(8);
    Rng gen(4);
    for (auto& v : table) v = uint32_t(gen.below(8)) & 0b110;
    const TruthTable F(3, 3, table);
    const auto sets = algorithm1(F, 16, Rng(1));
    CHECK(enumerate(sets[0], 0).size() == 8);
    CHECK(enumerate(sets[0], 1).empty());
}

TEST_CASE("algorithm1 is deterministic per seed") {
    const TruthTable F = fixture_sbox("ls4");
    const auto a = algorithm1(F, 109, Rng(3));
    const auto b = algorithm1(F, 109, Rng(3));
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].basis == b[j].basis);
        CHECK(a[j].particular == b[j].particular);
    }
    CHECK(algorithm1(F, 109, Rng(4))[1].basis.size() <= 4);
}

TEST_CASE("full walk on a linear map recovers the whole graph") {
    const TruthTable lin = fixture_sbox("linear4");
    const auto sets = algorithm1(lin, choose_p(4, 4, {}), Rng(5));
    const auto cands = algorithm2_full(sets);
    std::set<DifferentialCandidate> got(cands.begin(), cands.end());
    std::set<DifferentialCandidate> want;
    for (uint32_t a = 1; a < 16; ++a) want.insert({a, lin(a), 0xF});
    // lin is linear: lin(x^a)^lin(x) = lin(a) exactly
    CHECK(got == want);
    for (const auto& c : cands) CHECK(differential_probability(lin, c).num == 16);

    // partial walk never hits an unknown bit on a linear map
    const auto partial = algorithm2_partial(sets);
    CHECK(std::set<DifferentialCandidate>(partial.begin(), partial.end()) == want);
}

TEST_CASE("walk abandons and masks as advertised") {
    // A_1 from one full-weight row; A_2 constrained with an unsatisfiable
    // inhomogeneous side
    std::vector<SolutionSets> sets;
    sets.push_back(solve(BitMatrix({0b11}, 2)));
    sets.push_back(solve(BitMatrix({0b01, 0b00}, 2)));
    REQUIRE_FALSE(sets[1].particular.has_value());

    // full: a = 3 and a = 1 fall into neither side of coordinate 2
    const auto full = algorithm2_full(sets);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == DifferentialCandidate{0b10, 0b01, 0b11});

    // partial: the same a survive with coordinate 2 unknown
    const auto partial = algorithm2_partial(sets);
    const std::set<DifferentialCandidate> got(partial.begin(), partial.end());
    const std::set<DifferentialCandidate> want = {
        {0b11, 0b00, 0b01}, {0b01, 0b01, 0b01}, {0b10, 0b01, 0b11}};
    CHECK(got == want);

    // a min_known floor of 2 drops the single-bit masks
    const auto strict = algorithm2_partial(sets, 2);
    REQUIRE(strict.size() == 1);
    CHECK(strict[0] == DifferentialCandidate{0b10, 0b01, 0b11});
    CHECK_THROWS_AS(algorithm2_partial(sets, 0), std::invalid_argument);
}

TEST_CASE("ls4's exact structure is always found") {
    const TruthTable F = fixture_sbox("ls4");
    CHECK(ddt(F).at(1, 2) == 16);
    for (uint64_t seed : {3, 17, 255}) {
        const auto cands = algorithm2_full(algorithm1(F, 109, Rng(seed)));
        CHECK(std::count(cands.begin(), cands.end(), DifferentialCandidate{1, 2, 0xF}) == 1);
    }
}

TEST_CASE("emitted candidates honor the set memberships") {
    const TruthTable F = fixture_sbox("present4");
    const auto sets = algorithm1(F, 12, Rng(2));
    for (const auto& c : algorithm2_full(sets)) {
        CHECK(c.dx != 0);
        CHECK(c.mask == 0xF);
        for (int j = 0; j < 4; ++j) CHECK(contains(sets[j], (c.dy >> j) & 1, c.dx));
    }
    for (const auto& c : algorithm2_partial(sets)) {
        CHECK(c.dx != 0);
        CHECK(c.mask != 0);
        CHECK((c.dy & ~c.mask) == 0);
        CHECK(std::popcount(c.mask) >= 1);
        for (int j = 0; j < 4; ++j)
            if ((c.mask >> j) & 1) CHECK(contains(sets[j], (c.dy >> j) & 1, c.dx));
    }
}
