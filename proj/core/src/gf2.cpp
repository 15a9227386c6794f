#include "qdc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qdc {

BitMatrix::BitMatrix(std::size_t rows, int cols) : rows_(rows, 0), cols_(cols) {
    if (cols < 1 || cols > 32) throw std::invalid_argument("column count must be in 1..32");
}

BitMatrix::BitMatrix(std::vector<uint64_t> rows, int cols) : rows_(std::move(rows)), cols_(cols) {
    if (cols < 1 || cols > 32) throw std::invalid_argument("column count must be in 1..32");
    const uint64_t limit = uint64_t(1) << cols;
    for (uint64_t r : rows_)
        if (r >= limit) throw std::invalid_argument("row wider than column count");
}

void BitMatrix::set_row(std::size_t r, uint64_t bits) {
    if (bits >> cols_) throw std::invalid_argument("row wider than column count");
    rows_[r] = bits;
}

int BitMatrix::dot(std::size_t r, uint64_t x) const {
    return std::popcount(rows_[r] & x) & 1;
}

BitMatrix from_samples(const SampleSet& s) {
    if (s.samples.empty()) throw std::invalid_argument("cannot build a system from zero samples");
    std::vector<uint64_t> rows(s.samples.begin(), s.samples.end());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return BitMatrix(std::move(rows), s.m);
}

SolutionSets solve(const BitMatrix& mat) {
    const int m = mat.cols();
    // pivot_row[c] owns column c as its leading (highest) bit
    std::vector<uint64_t> pivot_row(m, 0);
    std::vector<uint8_t> pivot_rhs(m, 0);
    std::vector<bool> has_pivot(m, false);
    bool ones_consistent = true;

    for (std::size_t r = 0; r < mat.rows(); ++r) {
        uint64_t cur = mat.row(r);
        uint8_t rhs = 1;  // the inhomogeneous system carries RHS 1 per row
        while (cur) {
            const int c = 63 - std::countl_zero(cur);
            if (!has_pivot[c]) {
                pivot_row[c] = cur;
                pivot_rhs[c] = rhs;
                has_pivot[c] = true;
                break;
            }
            cur ^= pivot_row[c];
            rhs ^= pivot_rhs[c];
        }
        if (cur == 0 && rhs == 1) ones_consistent = false;  // includes all-zero rows
    }

    // full back-reduction to RREF (unique canonical form)
    for (int c = 0; c < m; ++c) {
        if (!has_pivot[c]) continue;
        for (int c2 = c + 1; c2 < m; ++c2) {
            if (has_pivot[c2] && ((pivot_row[c2] >> c) & 1)) {
                pivot_row[c2] ^= pivot_row[c];
                pivot_rhs[c2] ^= pivot_rhs[c];
            }
        }
    }

    SolutionSets out;
    out.m = m;
    for (int f = 0; f < m; ++f) {
        if (has_pivot[f]) continue;
        uint32_t v = uint32_t(1) << f;
        for (int c = 0; c < m; ++c)
            if (has_pivot[c] && ((pivot_row[c] >> f) & 1)) v |= uint32_t(1) << c;
        out.basis.push_back(v);
        out.free_cols.push_back(f);
    }
    if (ones_consistent && mat.rows() > 0) {
        // free variables zero, pivot variables from the reduced RHS
        uint32_t part = 0;
        for (int c = 0; c < m; ++c)
            if (has_pivot[c] && pivot_rhs[c]) part |= uint32_t(1) << c;
        out.particular = part;
    }
    return out;
}

std::vector<uint32_t> enumerate(const SolutionSets& sol, int which, std::size_t cap) {
    if (which != 0 && which != 1) throw std::invalid_argument("which must be 0 or 1");
    if (which == 1 && !sol.particular) return {};
    if (sol.basis.size() > cap) throw DimensionTooLarge(sol.basis.size(), cap);

    const uint32_t shift = which == 1 ? *sol.particular : 0;
    std::vector<uint32_t> out;
    out.reserve(std::size_t(1) << sol.basis.size());
    out.push_back(shift);
    for (uint32_t b : sol.basis) {
        const std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] ^ b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const SolutionSets& sol, int which, uint32_t a) {
    if (which != 0 && which != 1) throw std::invalid_argument("which must be 0 or 1");
    if (which == 1) {
        if (!sol.particular) return false;
        a ^= *sol.particular;
    }
    for (std::size_t i = 0; i < sol.basis.size(); ++i)
        if ((a >> sol.free_cols[i]) & 1) a ^= sol.basis[i];
    return a == 0;
}

}  // namespace qdc
