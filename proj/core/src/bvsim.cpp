#include "qdc/bvsim.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdc {

BvDistribution bv_distribution(const BooleanComponent& f) {
    const WalshSpectrum spec = walsh_spectrum(f);
    BvDistribution dist;
    dist.m = f.m;
    dist.weights.resize(spec.coeffs.size());
    dist.cum.resize(spec.coeffs.size());
    uint64_t running = 0;
    for (std::size_t w = 0; w < spec.coeffs.size(); ++w) {
        const uint64_t sq = uint64_t(spec.coeffs[w] * spec.coeffs[w]);
        dist.weights[w] = sq;
        running += sq;
        dist.cum[w] = running;
    }
    dist.total = running;
    // Parseval: sum of squared coefficients is exactly 4^m.
    if (dist.total != uint64_t(1) << (2 * f.m))
        throw std::logic_error("Walsh weights do not sum to 4^m");
    return dist;
}

uint32_t bv_sample(const BvDistribution& dist, Rng& rng) {
    const uint64_t u = rng.below(dist.total);
    // first index with cum[w] > u
    const auto it = std::upper_bound(dist.cum.begin(), dist.cum.end(), u);
    return uint32_t(it - dist.cum.begin());
}

SampleSet bv_batch(const BooleanComponent& f, std::size_t p, Rng& rng) {
    if (p < 1) throw std::invalid_argument("run count p must be at least 1");
    const BvDistribution dist = bv_distribution(f);
    SampleSet out;
    out.m = f.m;
    out.samples.reserve(p);
    for (std::size_t i = 0; i < p; ++i) out.samples.push_back(bv_sample(dist, rng));
    return out;
}

}  // namespace qdc
