#pragma once

#include "cychains/multivector.hpp"

#include <map>
#include <string>
#include <vector>

namespace cychains {

// derivative multi-index (nonnegative orders per axis)
using MultiIdx = std::vector<int>;

MultiIdx midx_zero(int dim);
MultiIdx midx_axis(int dim, int i);
bool midx_is_zero(const MultiIdx& a);
MultiIdx midx_add(const MultiIdx& a, const MultiIdx& b);

// binomial coefficient, exact
Rational binom(int n, int k);
// product over axes of binom(a[i], b[i]); requires b <= a componentwise
Rational midx_binom(const MultiIdx& a, const MultiIdx& b);
// all componentwise splits mu <= a
std::vector<MultiIdx> midx_splits(const MultiIdx& a);

LaurentPoly apply_partial(const LaurentPoly& f, const MultiIdx& a);

// Scalar differential operator on A of arity one, not assumed normalized:
// sum of f * d^alpha terms. Used for formal adjoints.
class DiffOp {
public:
    using Terms = std::map<MultiIdx, LaurentPoly>;

    DiffOp() : dim_(-1) {}
    explicit DiffOp(int dim) : dim_(dim) {}

    static DiffOp multiplication(const LaurentPoly& f);
    static DiffOp partial(int dim, int i);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const MultiIdx& a, const LaurentPoly& f);

    LaurentPoly apply(const LaurentPoly& f) const;

    DiffOp operator-() const;
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    friend DiffOp compose(const DiffOp& a, const DiffOp& b); // a after b
    DiffOp scaled(const Rational& c) const;

    friend bool operator==(const DiffOp& a, const DiffOp& b);
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    std::string str() const;

private:
    int dim_;
    Terms terms_;
};

// unique adjoint with residue(D(f) g rho) = residue(f D*(g) rho) for the
// density rho of the volume form, computed by integration by parts
DiffOp formal_adjoint_diffop(const DiffOp& d, const VolumeForm& vol);

// residue pairing used by the adjoint: residue of f*g w.r.t. the volume form
Rational residue_pair(const LaurentPoly& f, const LaurentPoly& g, const VolumeForm& vol);

} // namespace cychains
