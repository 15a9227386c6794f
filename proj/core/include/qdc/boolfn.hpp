#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace qdc {

// Width cap shared by all modules: 2^m tables stay at desk scale.
inline constexpr int kMaxWidth = 24;

inline int parity(uint32_t x) { return std::popcount(x) & 1; }

// A vectorial Boolean function F: {0,1}^m -> {0,1}^n stored as 2^m output
// words. Bit conventions used throughout the project: bit index 0 is the
// least significant bit, the first output coordinate f_1 lives in bit 0,
// and w.x means parity(w AND x).
class TruthTable {
public:
    TruthTable(int m, int n, std::vector<uint32_t> table);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<uint32_t>& table() const { return table_; }
    uint32_t operator()(uint32_t x) const { return table_[x]; }
    std::size_t domain_size() const { return table_.size(); }

    bool operator==(const TruthTable&) const = default;

private:
    int m_;
    int n_;
    std::vector<uint32_t> table_;
};

// One output coordinate of a vectorial function: 2^m values in {0,1}.
struct BooleanComponent {
    int m = 0;
    std::vector<uint8_t> bits;

    bool operator==(const BooleanComponent&) const = default;
};

// Exact integer Walsh coefficients W(w) = sum_x (-1)^(f(x) XOR w.x).
// Stored unnormalized so spectra and the derived sampling weights stay
// exact integers; the 1/2^m normalization is applied symbolically by
// consumers.
struct WalshSpectrum {
    int m = 0;
    std::vector<int64_t> coeffs;
};

// Extract coordinate j (1-based, f_1 <-> bit 0). Throws std::out_of_range
// for j outside 1..n.
BooleanComponent component(const TruthTable& f, int j);

// Reassemble n components into a table; inverse of component().
TruthTable recompose(const std::vector<BooleanComponent>& parts);

// Fast Walsh-Hadamard transform, O(m 2^m).
WalshSpectrum walsh_spectrum(const BooleanComponent& f);

// bits[x] = parity(v AND x) XOR c.
BooleanComponent linear_component(int m, uint32_t v, int c);

// Uniform over all 2^(n 2^m) tables; deterministic per seed.
TruthTable random_sbox(int m, int n, uint64_t seed);

// Named built-in tables; throws std::invalid_argument on unknown names.
// See fixture_names() for the list.
TruthTable fixture_sbox(const std::string& name);
const std::vector<std::string>& fixture_names();

}  // namespace qdc
