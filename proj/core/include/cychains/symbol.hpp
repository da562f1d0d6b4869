#pragma once

#include "cychains/diffop.hpp"
#include "cychains/linalg.hpp"
#include "cychains/multivector.hpp"

#include <map>
#include <string>
#include <vector>

namespace cychains {

// Element of Wedge^p (Q^d)* (x) S^q Q^d, exact-rational coordinates on
// the basis (index set of size p, symmetric multi-index of weight q).
class SymbolElement {
public:
    struct Key {
        Mask wedge = 0;
        MultiIdx sym;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.wedge != b.wedge) return a.wedge < b.wedge;
            return a.sym < b.sym;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.wedge == b.wedge && a.sym == b.sym;
        }
    };
    using Terms = std::map<Key, Rational>;

    SymbolElement() : dim_(-1) {}
    explicit SymbolElement(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Key& k, const Rational& c);

    SymbolElement operator-() const;
    friend SymbolElement operator+(const SymbolElement& a, const SymbolElement& b);
    friend SymbolElement operator-(const SymbolElement& a, const SymbolElement& b);
    SymbolElement scaled(const Rational& c) const;
    friend bool operator==(const SymbolElement& a, const SymbolElement& b);
    friend bool operator!=(const SymbolElement& a, const SymbolElement& b) { return !(a == b); }

    size_t term_count() const { return terms_.size(); }
    SymbolElement without_term(size_t k) const;
    std::string str() const;

private:
    int dim_;
    Terms terms_;
};

// d_0 = sum_i (dx_i ^ .) (x) (x_i .), bidegree (1,1), squares to zero
SymbolElement koszul_symbol_d0(const SymbolElement& s);

// basis of the (p, q) bigraded piece
std::vector<SymbolElement::Key> symbol_basis(int dim, int p, int q);

// exact cohomology dimensions of d_0 along the line q - p = c, indexed by
// p from max(0,-c) to min(d, qmax - c)
std::vector<int> koszul_line_cohomology(int dim, int c, int qmax);

} // namespace cychains
