#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdc/gf2.hpp"

namespace qdc {

// Run-count and threshold constants. p(m) = c*m; epsilon = 1/(c1*n);
// c2 defaults to 1 + ln(n)/2.
struct ParamConfig {
    double c = 2.0;
    double c1 = 2.0;
    std::optional<double> c2;
    std::optional<uint64_t> p_override;

    double effective_c2(int n) const;
    double epsilon(int n) const { return 1.0 / (c1 * n); }
};

// p = max{ c*m, ceil(c2 * c1^2 * n^2) }, unless overridden.
uint64_t choose_p(int m, int n, const ParamConfig& cfg = {});

// An input difference dx together with an output-difference pattern dy on
// the known output bits. mask marks which output bits are known (all-ones
// for the full walk); dy AND NOT mask is always zero and dx is never zero.
struct DifferentialCandidate {
    uint32_t dx = 0;
    uint32_t dy = 0;
    uint32_t mask = 0;

    auto operator<=>(const DifferentialCandidate&) const = default;
};

// For each coordinate f_j of F, run p BV samples, build the system, and
// solve it. Component j draws from the stream rng.derive(j), so the n
// batches can run in any order (or concurrently) with identical results.
std::vector<SolutionSets> algorithm1(const TruthTable& F, std::size_t p, const Rng& rng);

// Full walk: for each a in A_1^{i1} (a != 0, i1 = 0 then 1, a ascending),
// extend the pattern through j = 2..n; a coordinate with a in neither set
// abandons a (the zero-differential sentinel is represented by omission).
// Emitted masks are all-ones.
std::vector<DifferentialCandidate> algorithm2_full(const std::vector<SolutionSets>& sets,
                                                   std::size_t cap = kDefaultEnumCap);

// Line-5-free walk: coordinates with a in neither set are marked unknown
// (mask bit cleared) and the walk continues. Emits every a whose mask has
// at least min_known bits set.
std::vector<DifferentialCandidate> algorithm2_partial(const std::vector<SolutionSets>& sets,
                                                      int min_known = 1,
                                                      std::size_t cap = kDefaultEnumCap);

}  // namespace qdc
