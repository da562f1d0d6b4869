#pragma once

#include "cychains/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cychains {

// Exponent vector in Z^d.
using ExpVec = std::vector<int>;

ExpVec exp_zero(int dim);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);

// Sparse Laurent polynomial over Q in d commuting variables t_1..t_d.
// Invariant: no zero coefficients are stored, all exponent vectors have
// length dim. A default-constructed value is the zero polynomial and is
// compatible with any dimension.
class LaurentPoly {
public:
    using Terms = std::map<ExpVec, Rational>;

    LaurentPoly() : dim_(-1) {}
    explicit LaurentPoly(int dim) : dim_(dim) {}

    static LaurentPoly zero(int dim) { return LaurentPoly(dim); }
    static LaurentPoly constant(int dim, const Rational& c);
    static LaurentPoly monomial(int dim, const ExpVec& e, const Rational& c);
    // t_i, 1-based axis.
    static LaurentPoly variable(int dim, int i);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    Rational coefficient(const ExpVec& e) const;
    Rational constant_term() const;

    void add_term(const ExpVec& e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const Rational& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // exact d/dt_i, 1-based axis
    LaurentPoly partial(int i) const;

    // representative of the class in A/Q*1: the constant term stripped
    LaurentPoly strip_constant() const;

    // drops the k-th stored term (shrinking support)
    LaurentPoly without_term(size_t k) const;

    std::string str() const;

private:
    int dim_;
    Terms terms_;

    void check_dim(const LaurentPoly& o) const;
};

std::string exp_str(const ExpVec& e);

} // namespace cychains
