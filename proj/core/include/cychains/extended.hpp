#pragma once

#include "cychains/cartan.hpp"
#include "cychains/hochschild.hpp"

#include <map>
#include <string>
#include <vector>

namespace cychains {

// Term key of an extended-complex element: a form factor dt_K and one
// derivative multi-index per slot, slot 0 included.
struct EKey {
    Mask form_mask = 0;
    Slots slots;

    friend bool operator<(const EKey& a, const EKey& b) {
        if (a.form_mask != b.form_mask) return a.form_mask < b.form_mask;
        return a.slots < b.slots;
    }
    friend bool operator==(const EKey& a, const EKey& b) {
        return a.form_mask == b.form_mask && a.slots == b.slots;
    }
};

// Element of the extended complex: formal sum of (coef, slots, dt_K)
// terms evaluating to coef * prod_j d^{slot_j} a_j * dt_K. Terms of
// different arity and form rank may coexist; the differentials act
// per arity.
class EElement {
public:
    using Terms = std::map<EKey, LaurentPoly>;

    EElement() : dim_(-1) {}
    explicit EElement(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const EKey& k, const LaurentPoly& c);

    // evaluation at functions, one per slot; selects the matching arity part
    DiffForm apply(const std::vector<LaurentPoly>& args) const;

    EElement operator-() const;
    friend EElement operator+(const EElement& a, const EElement& b);
    friend EElement operator-(const EElement& a, const EElement& b);
    EElement scaled(const Rational& c) const;

    friend bool operator==(const EElement& a, const EElement& b);
    friend bool operator!=(const EElement& a, const EElement& b) { return !(a == b); }

    // restriction to terms with exactly `slots` slots
    EElement arity_part(int slots) const;
    // restriction to terms of form rank p
    EElement form_rank_part(int p) const;
    std::vector<int> arities() const;

    // vanishing upon insertion of 1 into slots 1..n (slot 0 unrestricted)
    bool is_normalized() const;

    size_t term_count() const { return terms_.size(); }
    EElement without_term(size_t k) const;

    std::string str() const;

private:
    int dim_;
    Terms terms_;
};

using UEElement = USeries<EElement>;

// cyclic bar differential, no a_0 Phi(a_1..) term
EElement extended_b(const EElement& e);
// flat connection: d of the evaluated output, with the sign
// (-1)^{slot count} placed so that b nabla + nabla b = 0
EElement extended_nabla(const EElement& e);
// (sigma Phi)(a_0..a_n) = (-1)^n Phi(a_1..a_n, a_0)
EElement cyclic_sigma(const EElement& e);
// substitute 1 into slot 0, slot count drops by one
EElement insert_unit_slot0(const EElement& e);
// Connes B on the normalized subcomplex: cyclic symmetrization of the
// unit insertion; validated by B^2 = 0 and bB + Bb = 0
EElement connes_B_extended(const EElement& e);

// slot-zero multiplication embedding of a top-form valued cochain
EElement embed_cochain(const MultiDiffOp& phi);

// nu (x) Omega -> ((a_1..a_k) -> iota_nu(da_1 ^..^ da_k) * Omega)
MultiDiffOp hkr_vt(const VTop& x);

// scalar variant: gamma -> ((a_1..a_k) -> iota_gamma(da_1 ^..^ da_k))
MultiDiffOp hkr_cochain(const MultiVector& gamma);

// representative of the top-form-degree part of e modulo the images under
// the connection of single-step preimage candidates inside the window
// (exponents in [lo,hi], slot orders <= order_cap); exact linear algebra
EElement project_top_mod_exact(const EElement& e, int lo, int hi, int order_cap);

} // namespace cychains
