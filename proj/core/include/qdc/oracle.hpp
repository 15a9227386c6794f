#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qdc/differential.hpp"

namespace qdc {

// Difference distribution table: counts[a][b] = |{x : F(x XOR a) XOR F(x) = b}|.
struct Ddt {
    int m = 0;
    int n = 0;
    std::vector<uint32_t> counts;  // row-major, 2^m rows of 2^n entries

    uint32_t at(uint32_t a, uint32_t b) const {
        return counts[(std::size_t(a) << n) | b];
    }
    uint32_t max_count(bool skip_zero_row = true) const;
};

// Exact count scan; requires m + n <= 28.
Ddt ddt(const TruthTable& F);

// Exact rational with denominator 2^m.
struct ExactProb {
    uint64_t num = 0;
    uint64_t den = 1;

    double value() const { return double(num) / double(den); }
    friend auto operator<=>(const ExactProb& a, const ExactProb& b) {
        return a.num * b.den <=> b.num * a.den;
    }
    friend bool operator==(const ExactProb& a, const ExactProb& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// |{x : (F(x XOR dx) XOR F(x)) AND mask = dy}| / 2^m by direct scan; with
// a full mask this equals counts[dx][dy] / 2^m.
ExactProb differential_probability(const TruthTable& F, const DifferentialCandidate& cand);

struct VerifiedCandidate {
    DifferentialCandidate cand;
    ExactProb prob;
    bool below_half = false;  // probability <= 1/2, under the per-bit claim
};

// Attach exact probabilities, sort by probability descending (ties by
// ascending dx, dy, mask).
std::vector<VerifiedCandidate> verify_candidates(const TruthTable& F,
                                                 const std::vector<DifferentialCandidate>& cands);

// Monte Carlo check of the concentration bound on solution-set members.
struct ValidationReport {
    int m = 0;
    int n = 1;
    std::size_t trials = 0;
    std::size_t skipped = 0;        // trials abandoned on DimensionTooLarge
    uint64_t p = 0;
    double epsilon = 0.0;
    std::size_t pairs_checked = 0;  // candidate (a, pattern) pairs examined
    std::size_t violations = 0;     // pairs with probability <= threshold
    double threshold = 0.0;         // 1 - n*epsilon
    double bound = 0.0;             // per-pair or joint analytic bound
    double floor_bound = 0.0;       // 1 - 1/e^2 chain floor (joint only)

    // 1 when nothing was found to check: no pairs, no violations.
    double empirical_rate() const {
        return pairs_checked ? 1.0 - double(violations) / double(pairs_checked) : 1.0;
    }
    bool passes(double slack = 0.0) const { return empirical_rate() >= bound - slack; }

    static double bound_for(double p, double epsilon) {
        return 1.0 - std::exp(-2.0 * p * epsilon * epsilon);
    }
};

// Per-trial: draw a uniform random single-output function, run p BV
// samples, solve, enumerate both sets (DimensionTooLarge skips the trial,
// visibly), and check every (a, i) with a != 0 against the 1 - epsilon
// threshold by direct scan. a = 0 is excluded; it satisfies everything.
// Requires m <= 12 and epsilon in (0, 1).
ValidationReport validate_theorem1(int m, std::size_t trials, uint64_t p, double epsilon,
                                   const Rng& rng);

// Whole-S-box variant: random m->n tables, p from choose_p, full-walk
// candidates checked against the 1 - n*epsilon threshold, with the joint
// bound (1 - e^(-2 p eps^2))^n and the 1 - 1/e^2 floor reported. With
// n = 1 this reduces exactly to validate_theorem1.
ValidationReport validate_joint_bound(int m, int n, std::size_t trials, const ParamConfig& cfg,
                                      const Rng& rng);

}  // namespace qdc
