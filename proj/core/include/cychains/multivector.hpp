#pragma once

#include "cychains/laurent.hpp"
#include "cychains/useries.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace cychains {

// Strictly increasing index tuples I in {1..d} are stored as bitmasks,
// bit i-1 for index i.
using Mask = uint32_t;

int mask_rank(Mask m);
// sign of interleaving the sorted tuple A in front of the sorted tuple B
// into one sorted tuple; 0 if they intersect
int mask_merge_sign(Mask a, Mask b);
// sign of iota_{d_i} removing dt_i from the sorted tuple J (position parity);
// requires i in J
int mask_remove_sign(Mask j, int i);
std::string mask_str(Mask m, const char* gen);

// Multivector field: sum of f_I d_I with d_I = dt-dual coordinate frame
// wedge. Mixed wedge ranks are allowed in one value; graded formulas ask
// for homogeneity explicitly.
class MultiVector {
public:
    using Components = std::map<Mask, LaurentPoly>;

    MultiVector() : dim_(-1) {}
    explicit MultiVector(int dim) : dim_(dim) {}

    static MultiVector from_poly(const LaurentPoly& f);
    static MultiVector basis(int dim, Mask I, const LaurentPoly& coef);

    int dim() const { return dim_; }
    bool is_zero() const { return comps_.empty(); }
    const Components& components() const { return comps_; }
    LaurentPoly component(Mask I) const;
    void add_component(Mask I, const LaurentPoly& f);

    // wedge rank if all components agree, otherwise nullopt
    std::optional<int> pure_rank() const;
    // shifted degree |x| = rank - 1 for homogeneous values
    std::optional<int> degree() const;

    MultiVector operator-() const;
    MultiVector& operator+=(const MultiVector& o);
    MultiVector& operator-=(const MultiVector& o);
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
    MultiVector scaled(const Rational& c) const;
    MultiVector scaled_poly(const LaurentPoly& f) const;

    friend bool operator==(const MultiVector& a, const MultiVector& b);
    friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

    size_t term_count() const;
    MultiVector without_term(size_t k) const;

    std::string str() const;

private:
    int dim_;
    Components comps_;
};

// Differential form: sum of f_I dt_I. Graded degree of a rank-p form is -p.
class DiffForm {
public:
    using Components = std::map<Mask, LaurentPoly>;

    DiffForm() : dim_(-1) {}
    explicit DiffForm(int dim) : dim_(dim) {}

    static DiffForm from_poly(const LaurentPoly& f);
    static DiffForm basis(int dim, Mask I, const LaurentPoly& coef);

    int dim() const { return dim_; }
    bool is_zero() const { return comps_.empty(); }
    const Components& components() const { return comps_; }
    LaurentPoly component(Mask I) const;
    void add_component(Mask I, const LaurentPoly& f);

    std::optional<int> pure_rank() const;
    // negative grading: degree = -rank
    std::optional<int> degree() const;

    DiffForm operator-() const;
    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    DiffForm scaled(const Rational& c) const;
    DiffForm scaled_poly(const LaurentPoly& f) const;

    friend bool operator==(const DiffForm& a, const DiffForm& b);
    friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

    size_t term_count() const;
    DiffForm without_term(size_t k) const;

    std::string str() const;

private:
    int dim_;
    Components comps_;
};

// Volume form c * t^k * w_std, where w_std = dt_1^...^dt_d / (t_1...t_d).
// The density c * t^k is a unit of the Laurent ring, so contraction
// against the volume form is invertible.
struct VolumeForm {
    int dim = 0;
    Rational c = Rational(1);
    ExpVec k; // empty means 0

    static VolumeForm standard(int dim);
    static VolumeForm with_density(int dim, const Rational& c, const ExpVec& k);

    // density with respect to dt_1^...^dt_d (c * t^{k - (1,..,1)})
    LaurentPoly density_dt() const;
    // density with respect to w_std (c * t^k)
    LaurentPoly density_std() const;
    // as a top-rank DiffForm
    DiffForm as_form() const;

    friend bool operator==(const VolumeForm& a, const VolumeForm& b);
    std::string str() const;
};

// Multivector-valued top form nu (x) Omega. The shifted degree of a
// rank-p component is p - 1.
struct VTop {
    MultiVector mv;
    VolumeForm vol;

    VTop() = default;
    VTop(MultiVector m, VolumeForm v) : mv(std::move(m)), vol(std::move(v)) {}

    bool is_zero() const { return mv.is_zero(); }
    std::optional<int> degree() const { return mv.degree(); }

    VTop operator-() const { return VTop(-mv, vol); }
    friend VTop operator+(const VTop& a, const VTop& b);
    friend VTop operator-(const VTop& a, const VTop& b) { return a + (-b); }
    VTop scaled(const Rational& c) const { return VTop(mv.scaled(c), vol); }

    friend bool operator==(const VTop& a, const VTop& b);
    friend bool operator!=(const VTop& a, const VTop& b) { return !(a == b); }

    size_t term_count() const { return mv.term_count(); }
    VTop without_term(size_t k) const { return VTop(mv.without_term(k), vol); }
    std::string str() const;
};

using UMultiVector = USeries<MultiVector>;
using UDiffForm = USeries<DiffForm>;
using UVTop = USeries<VTop>;

// homogeneous shifted degree of a u-series (u contributes +2 per power)
template <class X>
std::optional<int> useries_degree(const USeries<X>& s) {
    std::optional<int> deg;
    for (int j = 0; j <= s.ucap(); ++j) {
        if (s.coeff(j).is_zero()) continue;
        auto d = s.coeff(j).degree();
        if (!d) return std::nullopt;
        int total = *d + 2 * j;
        if (deg && *deg != total) return std::nullopt;
        deg = total;
    }
    return deg;
}

} // namespace cychains
