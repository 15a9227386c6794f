#include "qdc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdc {

uint32_t Ddt::max_count(bool skip_zero_row) const {
    uint32_t best = 0;
    const std::size_t row_len = std::size_t(1) << n;
    for (std::size_t a = skip_zero_row ? 1 : 0; a < (std::size_t(1) << m); ++a)
        for (std::size_t b = 0; b < row_len; ++b) best = std::max(best, counts[(a << n) | b]);
    return best;
}

Ddt ddt(const TruthTable& F) {
    if (F.m() + F.n() > 28) throw std::invalid_argument("DDT size 2^(m+n) over the memory bound");
    Ddt out;
    out.m = F.m();
    out.n = F.n();
    out.counts.assign(std::size_t(1) << (F.m() + F.n()), 0);
    const std::size_t size = F.domain_size();
    for (std::size_t a = 0; a < size; ++a) {
        const std::size_t base = a << F.n();
        for (std::size_t x = 0; x < size; ++x)
            ++out.counts[base | (F(uint32_t(x ^ a)) ^ F(uint32_t(x)))];
    }
    return out;
}

ExactProb differential_probability(const TruthTable& F, const DifferentialCandidate& cand) {
    if (cand.dy & ~cand.mask) throw std::invalid_argument("dy has bits outside the mask");
    const std::size_t size = F.domain_size();
    uint64_t num = 0;
    for (std::size_t x = 0; x < size; ++x)
        num += ((F(uint32_t(x ^ cand.dx)) ^ F(uint32_t(x))) & cand.mask) == cand.dy;
    return {num, uint64_t(size)};
}

std::vector<VerifiedCandidate> verify_candidates(const TruthTable& F,
                                                 const std::vector<DifferentialCandidate>& cands) {
    std::vector<VerifiedCandidate> out;
    out.reserve(cands.size());
    for (const auto& c : cands) {
        const ExactProb p = differential_probability(F, c);
        out.push_back({c, p, 2 * p.num <= p.den});
    }
    std::sort(out.begin(), out.end(), [](const VerifiedCandidate& a, const VerifiedCandidate& b) {
        if (a.prob != b.prob) return b.prob < a.prob;
        return a.cand < b.cand;
    });
    return out;
}

namespace {

// Trials share one derivation scheme so that the joint validator with
// n = 1 reproduces the theorem-level validator exactly.
TruthTable trial_function(int m, int n, const Rng& root, std::size_t trial) {
    Rng trial_rng = root.derive(trial);
    return random_sbox(m, n, trial_rng.next());
}

}  // namespace

ValidationReport validate_theorem1(int m, std::size_t trials, uint64_t p, double epsilon,
                                   const Rng& rng) {
    if (m < 1 || m > 12) throw std::invalid_argument("validator requires 1 <= m <= 12");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
    ValidationReport rep;
    rep.m = m;
    rep.n = 1;
    rep.trials = trials;
    rep.p = p;
    rep.epsilon = epsilon;
    rep.threshold = 1.0 - epsilon;
    rep.bound = ValidationReport::bound_for(double(p), epsilon);

    const double size = double(std::size_t(1) << m);
    for (std::size_t t = 0; t < trials; ++t) {
        const TruthTable f = trial_function(m, 1, rng, t);
        const auto sets = algorithm1(f, p, rng.derive(t).derive(0));
        try {
            for (int i = 0; i <= 1; ++i) {
                for (uint32_t a : enumerate(sets[0], i)) {
                    if (a == 0) continue;
                    const ExactProb prob =
                        differential_probability(f, {a, uint32_t(i), 1});
                    ++rep.pairs_checked;
                    if (double(prob.num) <= rep.threshold * size) ++rep.violations;
                }
            }
        } catch (const DimensionTooLarge&) {
            ++rep.skipped;
        }
    }
    return rep;
}

ValidationReport validate_joint_bound(int m, int n, std::size_t trials, const ParamConfig& cfg,
                                      const Rng& rng) {
    if (m < 1 || m > 12) throw std::invalid_argument("validator requires 1 <= m <= 12");
    if (m + n > 28) throw std::invalid_argument("m + n over the DDT bound");
    ValidationReport rep;
    rep.m = m;
    rep.n = n;
    rep.trials = trials;
    rep.p = choose_p(m, n, cfg);
    rep.epsilon = cfg.epsilon(n);
    rep.threshold = 1.0 - n * rep.epsilon;
    const double per_bit = ValidationReport::bound_for(double(rep.p), rep.epsilon);
    rep.bound = std::pow(per_bit, n);
    rep.floor_bound = 1.0 - std::exp(-2.0);

    const double size = double(std::size_t(1) << m);
    for (std::size_t t = 0; t < trials; ++t) {
        const TruthTable F = trial_function(m, n, rng, t);
        const auto sets = algorithm1(F, rep.p, rng.derive(t).derive(0));
        try {
            for (const auto& cand : algorithm2_full(sets)) {
                const ExactProb prob = differential_probability(F, cand);
                ++rep.pairs_checked;
                if (double(prob.num) <= rep.threshold * size) ++rep.violations;
            }
        } catch (const DimensionTooLarge&) {
            ++rep.skipped;
        }
    }
    return rep;
}

}  // namespace qdc
