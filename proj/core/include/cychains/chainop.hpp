#pragma once

#include "cychains/extended.hpp"

#include <map>
#include <string>

namespace cychains {

// Multidifferential multivector-valued operator on chains: formal sum of
// terms (coef, slots beta_0..beta_n, output frame d_K) evaluating on an
// elementary tensor to coef * prod_j d^{beta_j} a_j * d_K. Terms of
// different arity may coexist.
class ChainOp {
public:
    struct Key {
        Slots slots;
        Mask out = 0;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.out != b.out) return a.out < b.out;
            return a.slots < b.slots;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.out == b.out && a.slots == b.slots;
        }
    };
    using Terms = std::map<Key, LaurentPoly>;

    ChainOp() : dim_(-1) {}
    explicit ChainOp(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Key& k, const LaurentPoly& c);

    MultiVector apply(const HochChain& c) const;

    ChainOp operator-() const;
    friend ChainOp operator+(const ChainOp& a, const ChainOp& b);
    friend ChainOp operator-(const ChainOp& a, const ChainOp& b);
    ChainOp scaled(const Rational& c) const;
    friend bool operator==(const ChainOp& a, const ChainOp& b);
    friend bool operator!=(const ChainOp& a, const ChainOp& b) { return !(a == b); }

    // vanishes upon insertion of constants into slots >= 1 (termwise check)
    bool is_normalized() const;

    size_t term_count() const { return terms_.size(); }
    ChainOp without_term(size_t k) const;
    std::string str() const;

private:
    int dim_;
    Terms terms_;
};

// lambda o b_H and lambda o B, symbolically (valid on normalized lambda)
ChainOp precompose_boundary(const ChainOp& lam);
ChainOp precompose_connes_B(const ChainOp& lam);
// lambda o L_D for a scalar cochain D
ChainOp precompose_action(const ChainOp& lam, const MultiDiffOp& d);

// iota_{lambda(.)} Omega as a concrete extended-complex element
EElement chainop_to_eelement(const ChainOp& lam, const VolumeForm& vol);

// mirror-contraction pairing of a chain against a multivector:
// a_0 (x) ... (x) a_n -> a_0 * upsilon_{da_1 ^..^ da_n}(gamma), as a
// symbolic operator on chains of every length
ChainOp toy_chain_to_vector(const MultiVector& gamma);

} // namespace cychains
