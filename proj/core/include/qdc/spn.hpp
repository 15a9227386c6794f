#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qdc/oracle.hpp"

namespace qdc {

// Toy substitution-permutation cipher on k = l*m bits: rounds 1..r-1 are
// key XOR, l parallel S-boxes, bit permutation; the last round is key
// XOR, S-box layer, and a final whitening key (no permutation), so the
// attack inverts it cleanly. round_keys has r+1 entries.
struct SpnSpec {
    int l = 0;
    int m = 0;
    int rounds = 0;
    TruthTable sbox;        // square and bijective
    std::vector<int> perm;  // input bit i -> output bit perm[i]

    int k() const { return l * m; }
    void validate() const;  // throws std::invalid_argument

    // k=16, l=4, m=4, r=3 with the "ls4" S-box and a scattering bit
    // permutation; the spec used by the CLI when none is given.
    static SpnSpec reference();
};

struct SpnKey {
    std::vector<uint32_t> round_keys;

    static SpnKey from_seed(const SpnSpec& spec, uint64_t seed);
};

uint32_t apply_perm(const std::vector<int>& perm, uint32_t x);
uint32_t sbox_layer(const SpnSpec& spec, uint32_t x);

uint32_t encrypt(const SpnSpec& spec, const SpnKey& key, uint32_t x);
uint32_t decrypt(const SpnSpec& spec, const SpnKey& key, uint32_t ct);

// The keyed map G from plaintext to the input of the last round, i.e. the
// state right after the XOR of round key r. encrypt(x) equals
// final-key XOR sbox_layer(G(x)) for all x. Materialized as a full table
// (k <= 20).
struct KeyedFunction {
    int k = 0;
    TruthTable table;

    uint32_t operator()(uint32_t x) const { return table(x); }
};

KeyedFunction extract_g(const SpnSpec& spec, const SpnKey& key);

struct AttackConfig {
    ParamConfig params;
    int min_known = 1;
    std::size_t cap = kDefaultEnumCap;
    int max_groups = 3;
    std::size_t num_pairs = 0;  // 0 -> ceil(8 / candidate probability)
    std::size_t top = 16;       // ranking entries kept in reports
};

// Run algorithm1 on the k coordinates of G, then the line-5-free walk.
// Requires k <= 20.
//
// The sampler computes component spectra directly from (spec, key); this
// realizes the assumption that the adversary holds a quantum circuit for
// G. It is an oracle model, not a classical attack: the simulation
// "knows" the key it is attacking.
std::vector<DifferentialCandidate> method2_pipeline(const SpnSpec& spec, const SpnKey& key,
                                                    const AttackConfig& cfg, const Rng& rng);

struct SubkeyGuess {
    uint32_t value = 0;    // guessed nibbles at their block positions, inactive groups zero
    uint32_t counter = 0;  // pairs whose masked last-round difference matched
};

// Counting attack on the final whitening key. Active groups are the S-box
// groups touched by cand.mask (throws GuessSpaceTooLarge above
// max_groups). For every assignment of the final-key nibbles in active
// groups, both ciphertexts are pushed back through the final XOR and the
// inverse S-box, and the guess scores when the reconstructed last-round
// input difference matches dy on the masked active bits. Returned sorted
// by counter descending, ties by ascending value.
//
// Note on identifiability: if the S-box has an exact linear structure
// (a, b), guesses v and v XOR b produce identical partial decryptions in
// every group, and in fact shifting the last two round keys by (a, b)
// inside one group leaves the whole encryption map unchanged. Against
// such S-boxes the counters determine the final-key nibble only up to
// that coset; no chosen-plaintext attack can do better.
std::vector<SubkeyGuess> recover_last_round_subkey(const SpnSpec& spec,
                                                   const std::function<uint32_t(uint32_t)>& enc_oracle,
                                                   const DifferentialCandidate& cand,
                                                   std::size_t num_pairs, Rng& rng,
                                                   int max_groups = 3);

// Keep only the S-box groups where the masked dy is nonzero. Groups with
// a known all-zero difference are dropped: equal ciphertext nibbles decrypt
// to equal values under every guess, so they carry no key information.
// Returns nullopt when nothing informative remains or more than
// max_groups groups would need guessing.
std::optional<DifferentialCandidate> restrict_to_informative_groups(const DifferentialCandidate& cand,
                                                                    const SpnSpec& spec,
                                                                    int max_groups = 3);

struct AttackOutcome {
    bool found_candidate = false;
    DifferentialCandidate candidate;  // restricted to informative groups
    ExactProb prob{0, 1};             // exact masked probability over G
    std::size_t num_pairs = 0;
    uint32_t group_mask = 0;          // block bits covered by active groups
    std::vector<SubkeyGuess> ranking;
    uint32_t true_subkey = 0;         // final-key bits at active groups
    bool success = false;             // ranking[0].value == true_subkey
};

// End-to-end driver: pipeline, verification of the restricted candidates
// against G by exact scan, best-candidate selection (highest probability,
// then smallest guess space, then smallest dx), and key recovery.
AttackOutcome run_method2_attack(const SpnSpec& spec, const SpnKey& key,
                                 const AttackConfig& cfg, const Rng& rng);

}  // namespace qdc
