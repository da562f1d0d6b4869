#pragma once

#include "cychains/diffop.hpp"
#include "cychains/useries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cychains {

// slot prescription of a multidifferential term: one derivative
// multi-index per argument
using Slots = std::vector<MultiIdx>;

// Multidifferential operator with a fixed arity. Canonical form merges
// identical slot patterns. Scalar-valued terms evaluate in A; top-form
// valued terms carry the density with respect to dt_1^...^dt_d.
class MultiDiffOp {
public:
    enum class Value { Scalar, TopForm };
    using Terms = std::map<Slots, LaurentPoly>;

    MultiDiffOp() : dim_(-1), arity_(0), value_(Value::Scalar) {}
    MultiDiffOp(int dim, int arity, Value v = Value::Scalar)
        : dim_(dim), arity_(arity), value_(v) {}

    // the commutative product of functions, arity 2
    static MultiDiffOp multiplication(int dim);
    // d^a as a 1-cochain
    static MultiDiffOp partial_cochain(int dim, const MultiIdx& a);
    // arity-0 cochain with a fixed value
    static MultiDiffOp constant_cochain(const LaurentPoly& f);

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    Value value_kind() const { return value_; }
    // shifted degree in the cochain dgla C^{.+1}
    int degree() const { return arity_ - 1; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Slots& s, const LaurentPoly& c);

    LaurentPoly apply(const std::vector<LaurentPoly>& args) const;
    // top-form valued evaluation as a DiffForm
    DiffForm apply_form(const std::vector<LaurentPoly>& args) const;

    // substitute the constant 1 into slot j (1-based), arity drops by one
    MultiDiffOp insert_one(int j) const;
    // vanishes upon insertion of a constant into any slot
    bool is_normalized() const;

    MultiDiffOp operator-() const;
    friend MultiDiffOp operator+(const MultiDiffOp& a, const MultiDiffOp& b);
    friend MultiDiffOp operator-(const MultiDiffOp& a, const MultiDiffOp& b);
    MultiDiffOp scaled(const Rational& c) const;

    friend bool operator==(const MultiDiffOp& a, const MultiDiffOp& b);
    friend bool operator!=(const MultiDiffOp& a, const MultiDiffOp& b) { return !(a == b); }

    size_t term_count() const { return terms_.size(); }
    MultiDiffOp without_term(size_t k) const;

    std::string str() const;

private:
    int dim_;
    int arity_;
    Value value_;
    Terms terms_;
};

// insertion of psi into slot i (1-based) of phi
MultiDiffOp insert_at(const MultiDiffOp& phi, int i, const MultiDiffOp& psi);
// the alternating insertion sum phi o psi
MultiDiffOp braces(const MultiDiffOp& phi, const MultiDiffOp& psi);
// [phi,psi]_G = phi o psi - (-1)^{(p-1)(q-1)} psi o phi
MultiDiffOp gerstenhaber(const MultiDiffOp& phi, const MultiDiffOp& psi);
// b^H = [m_0, .]_G on scalar cochains
MultiDiffOp cochain_differential(const MultiDiffOp& phi);
// Hochschild differential on top-form valued cochains in the convention
// that makes the slot-zero embedding into the extended complex a chain map
MultiDiffOp cochain_differential_valued(const MultiDiffOp& phi);

// Normalized Hochschild chain: sum of elementary monomial tensors
// a_0 (x) a_1 (x) ... (x) a_n, with slots 1..n carrying nonconstant
// monomials (the canonical representatives in A/Q*1). Mixed lengths may
// appear in one value; graded uses require homogeneity.
class HochChain {
public:
    // key = monomial exponents of all n+1 entries
    using Key = std::vector<ExpVec>;
    using Terms = std::map<Key, Rational>;

    HochChain() : dim_(-1) {}
    explicit HochChain(int dim) : dim_(dim) {}

    static HochChain elementary(int dim, const std::vector<LaurentPoly>& entries);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    // degree = -n for a homogeneous length-n chain
    std::optional<int> degree() const;

    // adds coef * (monomial tensor), stripping constants in slots >= 1
    void add_term(const Key& k, const Rational& c);

    HochChain operator-() const;
    friend HochChain operator+(const HochChain& a, const HochChain& b);
    friend HochChain operator-(const HochChain& a, const HochChain& b);
    HochChain scaled(const Rational& c) const;

    friend bool operator==(const HochChain& a, const HochChain& b);
    friend bool operator!=(const HochChain& a, const HochChain& b) { return !(a == b); }

    size_t term_count() const { return terms_.size(); }
    HochChain without_term(size_t k) const;

    std::string str() const;

private:
    int dim_;
    Terms terms_;
};

using UHochChain = USeries<HochChain>;

HochChain chain_boundary(const HochChain& c);
HochChain connes_B(const HochChain& c);
// the dgla action of scalar cochains on normalized chains; an operator
// whose arity exceeds length + 1 acts as zero (both index ranges of the
// defining sums are empty)
HochChain cochain_action(const MultiDiffOp& d, const HochChain& c);
// a_0 (x) a_1 ... a_n -> (1/n!) a_0 da_1 ^ ... ^ da_n
DiffForm hkr_chains(const HochChain& c);

// <phi, a_0 (x) ... (x) a_n> = residue of a_0 phi(a_1..a_n); 0 on arity mismatch
Rational pair_cochain_chain(const MultiDiffOp& phi, const HochChain& c);
USeries<Rational> pair_cochain_chain(const MultiDiffOp& phi, const UHochChain& c);

} // namespace cychains
