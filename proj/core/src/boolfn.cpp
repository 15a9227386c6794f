#include "qdc/boolfn.hpp"

#include <stdexcept>

#include "qdc/rng.hpp"

namespace qdc {

TruthTable::TruthTable(int m, int n, std::vector<uint32_t> table)
    : m_(m), n_(n), table_(std::move(table)) {
    if (m < 1 || m > kMaxWidth || n < 1 || n > kMaxWidth)
        throw std::invalid_argument("truth table widths must be in 1..24");
    if (table_.size() != (std::size_t(1) << m))
        throw std::invalid_argument("truth table must have exactly 2^m entries");
    const uint32_t limit = uint32_t(1) << n;
    for (uint32_t v : table_)
        if (v >= limit) throw std::invalid_argument("truth table entry exceeds 2^n");
}

BooleanComponent component(const TruthTable& f, int j) {
    if (j < 1 || j > f.n()) throw std::out_of_range("component index outside 1..n");
    BooleanComponent out;
    out.m = f.m();
    out.bits.resize(f.domain_size());
    const int shift = j - 1;
    for (std::size_t x = 0; x < f.domain_size(); ++x)
        out.bits[x] = uint8_t((f(uint32_t(x)) >> shift) & 1);
    return out;
}

TruthTable recompose(const std::vector<BooleanComponent>& parts) {
    if (parts.empty()) throw std::invalid_argument("recompose needs at least one component");
    const int m = parts[0].m;
    const std::size_t size = std::size_t(1) << m;
    for (const auto& p : parts)
        if (p.m != m || p.bits.size() != size)
            throw std::invalid_argument("recompose components disagree on width");
    std::vector<uint32_t> table(size, 0);
    for (std::size_t j = 0; j < parts.size(); ++j)
        for (std::size_t x = 0; x < size; ++x)
            table[x] |= uint32_t(parts[j].bits[x] & 1) << j;
    return TruthTable(m, int(parts.size()), std::move(table));
}

WalshSpectrum walsh_spectrum(const BooleanComponent& f) {
    WalshSpectrum out;
    out.m = f.m;
    const std::size_t size = std::size_t(1) << f.m;
    out.coeffs.resize(size);
    for (std::size_t x = 0; x < size; ++x)
        out.coeffs[x] = f.bits[x] ? -1 : 1;
    for (std::size_t h = 1; h < size; h <<= 1) {
        for (std::size_t i = 0; i < size; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const int64_t a = out.coeffs[j];
                const int64_t b = out.coeffs[j + h];
                out.coeffs[j] = a + b;
                out.coeffs[j + h] = a - b;
            }
        }
    }
    return out;
}

BooleanComponent linear_component(int m, uint32_t v, int c) {
    if (m < 1 || m > kMaxWidth) throw std::invalid_argument("width must be in 1..24");
    if (v >= (uint32_t(1) << m)) throw std::invalid_argument("coefficient vector exceeds 2^m");
    BooleanComponent out;
    out.m = m;
    out.bits.resize(std::size_t(1) << m);
    for (std::size_t x = 0; x < out.bits.size(); ++x)
        out.bits[x] = uint8_t(parity(v & uint32_t(x)) ^ (c & 1));
    return out;
}

TruthTable random_sbox(int m, int n, uint64_t seed) {
    if (m < 1 || m > kMaxWidth || n < 1 || n > kMaxWidth)
        throw std::invalid_argument("widths must be in 1..24");
    Rng rng(seed);
    std::vector<uint32_t> table(std::size_t(1) << m);
    for (auto& v : table) v = uint32_t(rng.below(uint64_t(1) << n));
    return TruthTable(m, n, std::move(table));
}

namespace {

// Bijective, single exact linear structure S(x^1) = S(x)^2; every other
// DDT entry is at most 4.
const std::vector<uint32_t> kLs4 = {0, 2, 1, 3, 4, 6, 8, 10, 11, 9, 14, 12, 5, 7, 13, 15};

// PRESENT cipher S-box; differential uniformity 4, no linear structures.
const std::vector<uint32_t> kPresent4 = {0xC, 5, 6, 0xB, 9, 0, 0xA, 0xD,
                                         3,   0xE, 0xF, 8, 4, 7, 1, 2};

// No exact structures, but one heavily biased differential:
// N(4, 2) = 12, so (4 -> 2) holds with probability 3/4.
const std::vector<uint32_t> kBiased4 = {0, 11, 7, 3, 5, 9, 2, 1, 13, 8, 4, 12, 15, 10, 6, 14};

// Multiplication by x in GF(2^4) mod x^4 + x + 1; invertible and linear.
std::vector<uint32_t> xtime_table() {
    std::vector<uint32_t> t(16);
    for (uint32_t x = 0; x < 16; ++x) t[x] = ((x << 1) ^ ((x >> 3) * 0b0011u)) & 0xF;
    return t;
}

std::vector<uint32_t> identity_table() {
    std::vector<uint32_t> t(16);
    for (uint32_t x = 0; x < 16; ++x) t[x] = x;
    return t;
}

// f(x) = x1 x2 + x3 x4 as a 4 -> 1 table; flat spectrum |W(w)| = 4.
std::vector<uint32_t> bent_table() {
    std::vector<uint32_t> t(16);
    for (uint32_t x = 0; x < 16; ++x)
        t[x] = ((x & 1) & ((x >> 1) & 1)) ^ (((x >> 2) & 1) & ((x >> 3) & 1));
    return t;
}

const std::vector<std::string> kFixtureNames = {"identity4", "linear4", "ls4",
                                                "present4", "biased4", "bent4"};

}  // namespace

TruthTable fixture_sbox(const std::string& name) {
    if (name == "identity4") return TruthTable(4, 4, identity_table());
    if (name == "linear4") return TruthTable(4, 4, xtime_table());
    if (name == "ls4") return TruthTable(4, 4, kLs4);
    if (name == "present4") return TruthTable(4, 4, kPresent4);
    if (name == "biased4") return TruthTable(4, 4, kBiased4);
    if (name == "bent4") return TruthTable(4, 1, bent_table());
    throw std::invalid_argument("unknown fixture \"" + name + "\"");
}

const std::vector<std::string>& fixture_names() { return kFixtureNames; }

}  // namespace qdc
