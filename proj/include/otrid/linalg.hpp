#pragma once

#include <vector>

#include "otrid/rational.hpp"

namespace otrid {

using RatVec = std::vector<Rational>;

// Exact reduced row-echelon form over the rationals. Rows end sorted by pivot
// column with leading 1s and zeros above and below, zero rows dropped, so two
// row spaces are equal iff their forms are identical.
struct RowSpace {
    int cols = 0;
    std::vector<RatVec> rows;  // kept in RREF

    explicit RowSpace(int columns) : cols(columns) {}

    int rank() const { return static_cast<int>(rows.size()); }

    // Reduces v against the current rows; returns true (and extends the
    // basis) when v is independent.
    bool insert(RatVec v);

    // v reduced against the rows (zero iff v lies in the span).
    RatVec reduce(RatVec v) const;
    bool contains(const RatVec& v) const;

    friend bool operator==(const RowSpace& a, const RowSpace& b) {
        return a.cols == b.cols && a.rows == b.rows;
    }

private:
    std::vector<int> pivots_;  // pivot column per row
};

// Basis of { v : M v = 0 }, deterministic (one vector per free column).
std::vector<RatVec> kernel_basis(const std::vector<RatVec>& matrix, int cols);

}  // namespace otrid
