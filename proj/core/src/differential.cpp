#include "qdc/differential.hpp"

#include <cmath>
#include <stdexcept>

namespace qdc {

double ParamConfig::effective_c2(int n) const {
    if (c2) return *c2;
    return 1.0 + std::log(double(n)) / 2.0;
}

uint64_t choose_p(int m, int n, const ParamConfig& cfg) {
    if (cfg.p_override) return *cfg.p_override;
    const double pm = cfg.c * m;
    const double joint = cfg.effective_c2(n) * cfg.c1 * cfg.c1 * double(n) * double(n);
    return uint64_t(std::max(std::ceil(pm), std::ceil(joint)));
}

std::vector<SolutionSets> algorithm1(const TruthTable& F, std::size_t p, const Rng& rng) {
    if (p < 1) throw std::invalid_argument("run count p must be at least 1");
    std::vector<SolutionSets> sets;
    sets.reserve(F.n());
    for (int j = 1; j <= F.n(); ++j) {
        Rng stream = rng.derive(uint64_t(j));
        const SampleSet samples = bv_batch(component(F, j), p, stream);
        sets.push_back(solve(from_samples(samples)));
    }
    return sets;
}

namespace {

// Shared walk over a in A_1^{i1}; full mode abandons a at the first
// coordinate that contains it in neither set, partial mode marks the bit
// unknown and continues.
std::vector<DifferentialCandidate> walk(const std::vector<SolutionSets>& sets, bool partial,
                                        int min_known, std::size_t cap) {
    if (sets.empty()) throw std::invalid_argument("walk needs at least one solution-set pair");
    const int n = int(sets.size());
    std::vector<DifferentialCandidate> out;
    for (int i1 = 0; i1 <= 1; ++i1) {
        for (uint32_t a : enumerate(sets[0], i1, cap)) {
            if (a == 0) continue;  // the zero differential carries nothing
            uint32_t dy = uint32_t(i1);
            uint32_t mask = 1;
            bool abandoned = false;
            for (int j = 2; j <= n; ++j) {
                const bool in0 = contains(sets[j - 1], 0, a);
                const bool in1 = contains(sets[j - 1], 1, a);
                // in0 && in1 cannot happen: A1 is a coset of A0 by a
                // vector with S.X = 1, so the two sets are disjoint.
                if (in0 || in1) {
                    mask |= uint32_t(1) << (j - 1);
                    if (in1) dy |= uint32_t(1) << (j - 1);
                } else if (!partial) {
                    abandoned = true;
                    break;
                }
            }
            if (abandoned) continue;
            if (partial && std::popcount(mask) < min_known) continue;
            out.push_back({a, dy, mask});
        }
    }
    return out;
}

}  // namespace

std::vector<DifferentialCandidate> algorithm2_full(const std::vector<SolutionSets>& sets,
                                                   std::size_t cap) {
    return walk(sets, false, 0, cap);
}

std::vector<DifferentialCandidate> algorithm2_partial(const std::vector<SolutionSets>& sets,
                                                      int min_known, std::size_t cap) {
    if (min_known < 1) throw std::invalid_argument("min_known must be at least 1");
    return walk(sets, true, min_known, cap);
}

}  // namespace qdc
