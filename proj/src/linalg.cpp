#include "otrid/linalg.hpp"

#include <algorithm>

#include "otrid/error.hpp"

namespace otrid {

RatVec RowSpace::reduce(RatVec v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Rational f = c;  // rows are normalized to leading 1
        for (int j = pivots_[r]; j < cols; ++j)
            if (!rows[r][j].is_zero()) v[j] = v[j] - f * rows[r][j];
    }
    return v;
}

bool RowSpace::contains(const RatVec& v) const {
    RatVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RowSpace::insert(RatVec v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < cols; ++j)
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    Rational lead = v[pivot];
    for (int j = pivot; j < cols; ++j)
        if (!v[j].is_zero()) v[j] = v[j] / lead;
    // back-substitute into existing rows to keep the reduced form
    for (size_t r = 0; r < rows.size(); ++r) {
        const Rational& c = rows[r][pivot];
        if (c.is_zero()) continue;
        Rational f = c;
        for (int j = pivot; j < cols; ++j)
            if (!v[j].is_zero()) rows[r][j] = rows[r][j] - f * v[j];
    }
    // keep rows ordered by pivot column
    size_t at = 0;
    while (at < rows.size() && pivots_[at] < pivot) ++at;
    rows.insert(rows.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, pivot);
    return true;
}

std::vector<RatVec> kernel_basis(const std::vector<RatVec>& matrix, int cols) {
    RowSpace space(cols);
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != cols) throw Error(Errc::domain, "kernel: ragged matrix");
        space.insert(row);
    }
    std::vector<bool> is_pivot(cols, false);
    std::vector<int> pivot_of_row(space.rows.size(), -1);
    for (size_t r = 0; r < space.rows.size(); ++r)
        for (int j = 0; j < cols; ++j)
            if (!space.rows[r][j].is_zero()) {
                is_pivot[j] = true;
                pivot_of_row[r] = j;
                break;
            }
    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rational(0));
        v[f] = Rational(1);
        for (size_t r = 0; r < space.rows.size(); ++r)
            v[pivot_of_row[r]] = -space.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace otrid
