#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdc/bvsim.hpp"
#include "qdc/errors.hpp"

namespace qdc {

inline constexpr std::size_t kDefaultEnumCap = 20;

// Dense GF(2) matrix with bit-packed rows. Column count is capped at 32
// (inputs everywhere in this project have m <= 24), so one word per row.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, int cols);
    BitMatrix(std::vector<uint64_t> rows, int cols);

    std::size_t rows() const { return rows_.size(); }
    int cols() const { return cols_; }
    uint64_t row(std::size_t r) const { return rows_[r]; }
    void set_row(std::size_t r, uint64_t bits);

    // parity of (row r) . x
    int dot(std::size_t r, uint64_t x) const;

private:
    std::vector<uint64_t> rows_;
    int cols_;
};

// Solutions of S.X = 0 and S.X = 1 for one sampled system.
//
// basis spans the nullspace (reduced form: each vector owns one free
// column that is zero in all the others), so |A0| = 2^dim. particular is
// a canonical solution of S.X = 1 when one exists; A1 = particular XOR
// span(basis) and is empty otherwise.
struct SolutionSets {
    int m = 0;
    std::vector<uint32_t> basis;
    std::vector<int> free_cols;          // free column owned by each basis vector
    std::optional<uint32_t> particular;

    std::size_t dimension() const { return basis.size(); }
};

// One matrix row per distinct sample. Sampled all-zero rows are kept:
// they are vacuous for S.X = 0 and make S.X = 1 inconsistent, which is a
// value, not an error. Empty sample sets are rejected.
BitMatrix from_samples(const SampleSet& s);

// Gaussian elimination to reduced row echelon form; nullspace basis via
// free-variable back-substitution; particular solution for the all-ones
// right-hand side, or nullopt when that system is inconsistent. An empty
// matrix yields A0 = F_2^m and, by convention, A1 = empty.
SolutionSets solve(const BitMatrix& mat);

// All members of A0 (which=0) or A1 (which=1), sorted ascending. Throws
// DimensionTooLarge when the basis dimension exceeds cap; an empty A1 is
// returned as an empty list without touching the cap.
std::vector<uint32_t> enumerate(const SolutionSets& sol, int which,
                                std::size_t cap = kDefaultEnumCap);

// Membership by reduction against the basis, O(m^2); never enumerates.
bool contains(const SolutionSets& sol, int which, uint32_t a);

}  // namespace qdc
