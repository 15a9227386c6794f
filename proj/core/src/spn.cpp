#include "qdc/spn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qdc {

namespace {

// Scattering bit permutation for the reference cipher. Each nibble sends
// bit 1 to the next nibble (the path exact structures travel) and sprays
// the remaining bits elsewhere, so generic differences hit two or more
// S-box groups after one round.
const std::vector<int> kReferencePerm16 = {9, 4, 14, 7, 13, 10, 1, 11, 0, 12, 5, 15, 6, 3, 8, 2};

std::vector<uint32_t> inverse_sbox(const TruthTable& sbox) {
    std::vector<uint32_t> inv(sbox.domain_size(), 0);
    for (std::size_t x = 0; x < sbox.domain_size(); ++x) inv[sbox(uint32_t(x))] = uint32_t(x);
    return inv;
}

}  // namespace

void SpnSpec::validate() const {
    if (l < 1 || m < 1 || rounds < 2)
        throw std::invalid_argument("cipher needs l >= 1, m >= 1, rounds >= 2");
    if (sbox.m() != m || sbox.n() != m)
        throw std::invalid_argument("cipher S-box must be square with width m");
    if (k() > kMaxWidth) throw std::invalid_argument("block width k over the 24-bit cap");
    if (int(perm.size()) != k()) throw std::invalid_argument("permutation must cover all k bits");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= k() || seen[p])
            throw std::invalid_argument("permutation is not a bijection on 0..k-1");
        seen[p] = true;
    }
    // decryption and key recovery both invert the S-box layer
    std::vector<bool> hit(sbox.domain_size(), false);
    for (std::size_t x = 0; x < sbox.domain_size(); ++x) {
        if (hit[sbox(uint32_t(x))]) throw std::invalid_argument("cipher S-box must be bijective");
        hit[sbox(uint32_t(x))] = true;
    }
}

SpnSpec SpnSpec::reference() {
    SpnSpec spec{4, 4, 3, fixture_sbox("ls4"), kReferencePerm16};
    spec.validate();
    return spec;
}

SpnKey SpnKey::from_seed(const SpnSpec& spec, uint64_t seed) {
    Rng rng(seed);
    SpnKey key;
    key.round_keys.reserve(spec.rounds + 1);
    for (int i = 0; i <= spec.rounds; ++i)
        key.round_keys.push_back(uint32_t(rng.below(uint64_t(1) << spec.k())));
    return key;
}

uint32_t apply_perm(const std::vector<int>& perm, uint32_t x) {
    uint32_t y = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        y |= ((x >> i) & 1u) << perm[i];
    return y;
}

uint32_t sbox_layer(const SpnSpec& spec, uint32_t x) {
    uint32_t y = 0;
    const uint32_t nib = (uint32_t(1) << spec.m) - 1;
    for (int g = 0; g < spec.l; ++g)
        y |= spec.sbox((x >> (g * spec.m)) & nib) << (g * spec.m);
    return y;
}

uint32_t encrypt(const SpnSpec& spec, const SpnKey& key, uint32_t x) {
    uint32_t st = x;
    for (int r = 0; r < spec.rounds - 1; ++r)
        st = apply_perm(spec.perm, sbox_layer(spec, st ^ key.round_keys[r]));
    st = sbox_layer(spec, st ^ key.round_keys[spec.rounds - 1]);
    return st ^ key.round_keys[spec.rounds];
}

uint32_t decrypt(const SpnSpec& spec, const SpnKey& key, uint32_t ct) {
    const std::vector<uint32_t> inv = inverse_sbox(spec.sbox);
    std::vector<int> inv_perm(spec.perm.size());
    for (std::size_t i = 0; i < spec.perm.size(); ++i) inv_perm[spec.perm[i]] = int(i);
    const uint32_t nib = (uint32_t(1) << spec.m) - 1;
    auto inv_layer = [&](uint32_t x) {
        uint32_t y = 0;
        for (int g = 0; g < spec.l; ++g) y |= inv[(x >> (g * spec.m)) & nib] << (g * spec.m);
        return y;
    };
    uint32_t st = inv_layer(ct ^ key.round_keys[spec.rounds]) ^ key.round_keys[spec.rounds - 1];
    for (int r = spec.rounds - 2; r >= 0; --r)
        st = inv_layer(apply_perm(inv_perm, st)) ^ key.round_keys[r];
    return st;
}

KeyedFunction extract_g(const SpnSpec& spec, const SpnKey& key) {
    const std::size_t size = std::size_t(1) << spec.k();
    std::vector<uint32_t> table(size);
    for (std::size_t x = 0; x < size; ++x) {
        uint32_t st = uint32_t(x);
        for (int r = 0; r < spec.rounds - 1; ++r)
            st = apply_perm(spec.perm, sbox_layer(spec, st ^ key.round_keys[r]));
        table[x] = st ^ key.round_keys[spec.rounds - 1];
    }
    return {spec.k(), TruthTable(spec.k(), spec.k(), std::move(table))};
}

std::vector<DifferentialCandidate> method2_pipeline(const SpnSpec& spec, const SpnKey& key,
                                                    const AttackConfig& cfg, const Rng& rng) {
    if (spec.k() > 20) throw std::invalid_argument("whole-cipher pipeline limited to k <= 20");
    const KeyedFunction g = extract_g(spec, key);
    const uint64_t p = choose_p(g.k, g.k, cfg.params);
    const auto sets = algorithm1(g.table, std::size_t(p), rng);
    return algorithm2_partial(sets, cfg.min_known, cfg.cap);
}

std::vector<SubkeyGuess> recover_last_round_subkey(const SpnSpec& spec,
                                                   const std::function<uint32_t(uint32_t)>& enc_oracle,
                                                   const DifferentialCandidate& cand,
                                                   std::size_t num_pairs, Rng& rng,
                                                   int max_groups) {
    if (cand.mask == 0) throw std::invalid_argument("candidate mask must be nonzero");
    if (num_pairs < 1) throw std::invalid_argument("need at least one plaintext pair");

    const uint32_t nib = (uint32_t(1) << spec.m) - 1;
    std::vector<int> groups;
    for (int g = 0; g < spec.l; ++g)
        if ((cand.mask >> (g * spec.m)) & nib) groups.push_back(g);
    if (int(groups.size()) > max_groups)
        throw GuessSpaceTooLarge(int(groups.size()), max_groups);

    const std::vector<uint32_t> inv = inverse_sbox(spec.sbox);
    const int t = int(groups.size());
    const std::size_t guess_count = std::size_t(1) << (spec.m * t);
    std::vector<uint32_t> counters(guess_count, 0);

    for (std::size_t i = 0; i < num_pairs; ++i) {
        const uint32_t x1 = uint32_t(rng.below(uint64_t(1) << spec.k()));
        const uint32_t c1 = enc_oracle(x1);
        const uint32_t c2 = enc_oracle(x1 ^ cand.dx);
        for (std::size_t guess = 0; guess < guess_count; ++guess) {
            bool match = true;
            for (int gi = 0; gi < t && match; ++gi) {
                const int shift = groups[gi] * spec.m;
                const uint32_t gv = (uint32_t(guess) >> (gi * spec.m)) & nib;
                const uint32_t u1 = inv[((c1 >> shift) & nib) ^ gv];
                const uint32_t u2 = inv[((c2 >> shift) & nib) ^ gv];
                match = ((u1 ^ u2) & ((cand.mask >> shift) & nib)) == ((cand.dy >> shift) & nib);
            }
            if (match) ++counters[guess];
        }
    }

    std::vector<SubkeyGuess> out;
    out.reserve(guess_count);
    for (std::size_t guess = 0; guess < guess_count; ++guess) {
        uint32_t placed = 0;
        for (int gi = 0; gi < t; ++gi)
            placed |= ((uint32_t(guess) >> (gi * spec.m)) & nib) << (groups[gi] * spec.m);
        out.push_back({placed, counters[guess]});
    }
    std::sort(out.begin(), out.end(), [](const SubkeyGuess& a, const SubkeyGuess& b) {
        if (a.counter != b.counter) return a.counter > b.counter;
        return a.value < b.value;
    });
    return out;
}

std::optional<DifferentialCandidate> restrict_to_informative_groups(const DifferentialCandidate& cand,
                                                                    const SpnSpec& spec,
                                                                    int max_groups) {
    const uint32_t nib = (uint32_t(1) << spec.m) - 1;
    uint32_t mask = 0;
    int active = 0;
    for (int g = 0; g < spec.l; ++g) {
        const int shift = g * spec.m;
        if ((cand.dy >> shift) & (cand.mask >> shift) & nib) {
            mask |= ((cand.mask >> shift) & nib) << shift;
            ++active;
        }
    }
    if (active == 0 || active > max_groups) return std::nullopt;
    return DifferentialCandidate{cand.dx, cand.dy & mask, mask};
}

AttackOutcome run_method2_attack(const SpnSpec& spec, const SpnKey& key, const AttackConfig& cfg,
                                 const Rng& rng) {
    AttackOutcome out;
    const auto cands = method2_pipeline(spec, key, cfg, rng.derive(1));

    std::vector<DifferentialCandidate> restricted;
    for (const auto& c : cands)
        if (auto r = restrict_to_informative_groups(c, spec, cfg.max_groups)) restricted.push_back(*r);
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
    if (restricted.empty()) return out;  // pipeline found nothing usable; reported, not fatal

    // rank by exact probability over G, then by guess-space size, then dx
    const KeyedFunction g = extract_g(spec, key);
    const auto verified = verify_candidates(g.table, restricted);
    const VerifiedCandidate* best = nullptr;
    auto guess_bits = [&](const DifferentialCandidate& c) {
        int groups = 0;
        const uint32_t nib = (uint32_t(1) << spec.m) - 1;
        for (int gi = 0; gi < spec.l; ++gi)
            if ((c.mask >> (gi * spec.m)) & nib) ++groups;
        return groups * spec.m;
    };
    for (const auto& v : verified) {
        if (v.prob.num == 0) continue;
        if (!best || v.prob > best->prob ||
            (v.prob == best->prob && guess_bits(v.cand) < guess_bits(best->cand)))
            best = &v;
    }
    if (!best) return out;

    out.found_candidate = true;
    out.candidate = best->cand;
    out.prob = best->prob;
    // default pair budget: ceil(8 / prob) = ceil(8 * den / num)
    out.num_pairs = cfg.num_pairs
                        ? cfg.num_pairs
                        : std::size_t((8 * best->prob.den + best->prob.num - 1) / best->prob.num);

    Rng pair_rng = rng.derive(2);
    auto oracle = [&](uint32_t x) { return encrypt(spec, key, x); };
    out.ranking = recover_last_round_subkey(spec, oracle, out.candidate, out.num_pairs, pair_rng,
                                            cfg.max_groups);

    const uint32_t nib = (uint32_t(1) << spec.m) - 1;
    for (int gi = 0; gi < spec.l; ++gi)
        if ((out.candidate.mask >> (gi * spec.m)) & nib)
            out.group_mask |= nib << (gi * spec.m);
    out.true_subkey = key.round_keys[spec.rounds] & out.group_mask;
    out.success = !out.ranking.empty() && out.ranking.front().value == out.true_subkey;
    if (out.ranking.size() > cfg.top) out.ranking.resize(cfg.top);
    return out;
}

}  // namespace qdc
