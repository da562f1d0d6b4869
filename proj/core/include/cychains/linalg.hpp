#pragma once

#include "cychains/rational.hpp"

#include <vector>

namespace cychains {

// dense exact-rational matrix, row major
class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i][j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i][j]; }

    // rank by Gaussian elimination over Q
    size_t rank() const;

    // reduce v modulo the column space; returns the residual vector
    std::vector<Rational> reduce_mod_columns(const std::vector<Rational>& v) const;

private:
    size_t rows_, cols_;
    std::vector<std::vector<Rational>> a_;
};

} // namespace cychains
