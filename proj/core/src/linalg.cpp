#include "cychains/linalg.hpp"

namespace cychains {

size_t RationalMatrix::rank() const {
    std::vector<std::vector<Rational>> m = a_;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows_) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = Rational(1) / m[rank][col];
        for (size_t j = col; j < cols_; ++j) m[rank][j] *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (size_t j = col; j < cols_; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<Rational> RationalMatrix::reduce_mod_columns(const std::vector<Rational>& v) const {
    // eliminate on the augmented matrix [A | v] column-wise: subtract
    // multiples of the columns of A from v greedily
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (size_t i = 0; i < rows_; ++i) m[i] = a_[i];
    std::vector<Rational> r = v;
    std::vector<bool> col_used(cols_, false);
    std::vector<bool> row_used(rows_, false);
    for (size_t col = 0; col < cols_; ++col) {
        size_t pivot = rows_;
        for (size_t i = 0; i < rows_; ++i)
            if (!row_used[i] && !m[i][col].is_zero()) { pivot = i; break; }
        if (pivot == rows_) continue;
        col_used[col] = true;
        row_used[pivot] = true;
        // clear this column from the other columns and from r
        Rational inv = Rational(1) / m[pivot][col];
        for (size_t c2 = col + 1; c2 < cols_; ++c2) {
            if (m[pivot][c2].is_zero()) continue;
            Rational f = m[pivot][c2] * inv;
            for (size_t i = 0; i < rows_; ++i) m[i][c2] -= f * m[i][col];
        }
        if (!r[pivot].is_zero()) {
            Rational f = r[pivot] * inv;
            for (size_t i = 0; i < rows_; ++i) r[i] -= f * m[i][col];
        }
    }
    return r;
}

} // namespace cychains
