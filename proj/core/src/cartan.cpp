#include "cychains/cartan.hpp"

#include <stdexcept>

namespace cychains {

namespace {

void check_dims(int a, int b, const char* who) {
    if (a >= 0 && b >= 0 && a != b) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

Mask full_mask(int dim) { return (Mask(1) << dim) - 1u; }

// iota_{d_i} on a single form component, highest index applied first is
// arranged by the caller
void contract_single(Mask I, const LaurentPoly& f, Mask J, const LaurentPoly& g, DiffForm& out) {
    if ((I & J) != I) return; // some generator missing
    // peel indices of I from highest to lowest
    int sign = 1;
    Mask rem = J;
    for (int i = 31; i >= 0; --i) {
        if (!((I >> i) & 1u)) continue;
        sign *= mask_remove_sign(rem, i + 1);
        rem &= ~(Mask(1) << i);
    }
    out.add_component(rem, (f * g).scaled(Rational(sign)));
}

} // namespace

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    check_dims(a.dim(), b.dim(), "wedge");
    MultiVector r(a.dim() >= 0 ? a.dim() : b.dim());
    for (const auto& [I, f] : a.components())
        for (const auto& [J, g] : b.components()) {
            int s = mask_merge_sign(I, J);
            if (s == 0) continue;
            r.add_component(I | J, (f * g).scaled(Rational(s)));
        }
    return r;
}

DiffForm wedge_form(const DiffForm& a, const DiffForm& b) {
    check_dims(a.dim(), b.dim(), "wedge_form");
    DiffForm r(a.dim() >= 0 ? a.dim() : b.dim());
    for (const auto& [I, f] : a.components())
        for (const auto& [J, g] : b.components()) {
            int s = mask_merge_sign(I, J);
            if (s == 0) continue;
            r.add_component(I | J, (f * g).scaled(Rational(s)));
        }
    return r;
}

DiffForm contract(const MultiVector& gamma, const DiffForm& alpha) {
    check_dims(gamma.dim(), alpha.dim(), "contract");
    DiffForm r(alpha.dim() >= 0 ? alpha.dim() : gamma.dim());
    for (const auto& [I, f] : gamma.components())
        for (const auto& [J, g] : alpha.components())
            contract_single(I, f, J, g, r);
    return r;
}

MultiVector contract_form_into_mv(const DiffForm& alpha, const MultiVector& gamma) {
    check_dims(gamma.dim(), alpha.dim(), "contract_form_into_mv");
    MultiVector r(gamma.dim() >= 0 ? gamma.dim() : alpha.dim());
    for (const auto& [J, g] : alpha.components())
        for (const auto& [I, f] : gamma.components()) {
            if ((J & I) != J) continue;
            int sign = 1;
            Mask rem = I;
            for (int i = 31; i >= 0; --i) {
                if (!((J >> i) & 1u)) continue;
                sign *= mask_remove_sign(rem, i + 1);
                rem &= ~(Mask(1) << i);
            }
            r.add_component(rem, (g * f).scaled(Rational(sign)));
        }
    return r;
}

DiffForm de_rham(const DiffForm& alpha) {
    if (alpha.dim() < 0) return alpha;
    DiffForm r(alpha.dim());
    for (const auto& [J, g] : alpha.components())
        for (int i = 1; i <= alpha.dim(); ++i) {
            Mask bit = Mask(1) << (i - 1);
            if (J & bit) continue;
            LaurentPoly dg = g.partial(i);
            if (dg.is_zero()) continue;
            r.add_component(J | bit, dg.scaled(Rational(mask_merge_sign(bit, J))));
        }
    return r;
}

DiffForm lie_derivative(const MultiVector& gamma, const DiffForm& alpha) {
    check_dims(gamma.dim(), alpha.dim(), "lie_derivative");
    DiffForm r(alpha.dim() >= 0 ? alpha.dim() : gamma.dim());
    // split by rank: the commutator sign uses the shifted degree rank-1
    for (const auto& [I, f] : gamma.components()) {
        MultiVector part = MultiVector::basis(gamma.dim(), I, f);
        int sgn = (mask_rank(I) - 1) % 2 == 0 ? 1 : -1;
        r += de_rham(contract(part, alpha));
        r += contract(part, de_rham(alpha)).scaled(Rational(sgn));
    }
    return r;
}

namespace {

// [a d_p, b d_q] for vector fields
MultiVector vf_bracket(int dim, const LaurentPoly& a, int p, const LaurentPoly& b, int q) {
    MultiVector r(dim);
    r.add_component(Mask(1) << (q - 1), a * b.partial(p));
    r.add_component(Mask(1) << (p - 1), -(b * a.partial(q)));
    return r;
}

// [v_1^..^v_m, g] = sum_i (-1)^{m-i} v_i(g) v_1^..^hat v_i^..^v_m,
// where v_1 carries the coefficient f
MultiVector bracket_with_function(int dim, const LaurentPoly& f, Mask I, const LaurentPoly& g) {
    MultiVector r(dim);
    int m = mask_rank(I);
    int i = 0;
    for (int bitpos = 0; bitpos < 32; ++bitpos) {
        if (!((I >> bitpos) & 1u)) continue;
        ++i; // 1-based factor index
        LaurentPoly vg = g.partial(bitpos + 1);
        if (i == 1)
            vg = f * vg;
        LaurentPoly coef = (i == 1) ? LaurentPoly::constant(dim, Rational(1)) : f;
        int sgn = (m - i) % 2 == 0 ? 1 : -1;
        r += MultiVector::basis(dim, I & ~(Mask(1) << bitpos), vg * coef).scaled(Rational(sgn));
    }
    return r;
}

// the double sum over pairs of wedge factors, coefficients riding on the
// first factor of each side
MultiVector schouten_terms(int dim, const LaurentPoly& f, Mask I, const LaurentPoly& g, Mask J) {
    int m = mask_rank(I), n = mask_rank(J);
    if (m == 0 && n == 0) return MultiVector(dim);
    if (n == 0) return bracket_with_function(dim, f, I, g);
    if (m == 0) {
        MultiVector r = bracket_with_function(dim, g, J, f);
        return n % 2 == 0 ? r : (-r);
    }
    MultiVector r(dim);
    int i = 0;
    for (int bi = 0; bi < 32; ++bi) {
        if (!((I >> bi) & 1u)) continue;
        ++i;
        int j = 0;
        for (int bj = 0; bj < 32; ++bj) {
            if (!((J >> bj) & 1u)) continue;
            ++j;
            LaurentPoly a = (i == 1) ? f : LaurentPoly::constant(dim, Rational(1));
            LaurentPoly b = (j == 1) ? g : LaurentPoly::constant(dim, Rational(1));
            MultiVector br = vf_bracket(dim, a, bi + 1, b, bj + 1);
            if (br.is_zero()) continue;
            LaurentPoly restI = (i == 1) ? LaurentPoly::constant(dim, Rational(1)) : f;
            LaurentPoly restJ = (j == 1) ? LaurentPoly::constant(dim, Rational(1)) : g;
            MultiVector left = MultiVector::basis(dim, I & ~(Mask(1) << bi), restI);
            MultiVector right = MultiVector::basis(dim, J & ~(Mask(1) << bj), restJ);
            MultiVector w = wedge(wedge(br, left), right);
            int sgn = (i + j) % 2 == 0 ? 1 : -1;
            r += w.scaled(Rational(sgn));
        }
    }
    return r;
}

} // namespace

MultiVector schouten(const MultiVector& a, const MultiVector& b) {
    check_dims(a.dim(), b.dim(), "schouten");
    int dim = a.dim() >= 0 ? a.dim() : b.dim();
    MultiVector r(dim);
    for (const auto& [I, f] : a.components())
        for (const auto& [J, g] : b.components())
            r += schouten_terms(dim, f, I, g, J);
    return r;
}

UMultiVector schouten(const UMultiVector& a, const UMultiVector& b) {
    return useries_convolve(a, b, [](const MultiVector& x, const MultiVector& y) {
        return schouten(x, y);
    });
}

MultiVector dualize_form(const VolumeForm& vol, const DiffForm& alpha) {
    check_dims(vol.dim, alpha.dim(), "dualize_form");
    Mask full = full_mask(vol.dim);
    LaurentPoly rho = vol.density_dt();
    // inverse of the monomial unit
    const auto& [re, rc] = *rho.terms().begin();
    ExpVec rinv(re);
    for (auto& x : rinv) x = -x;
    LaurentPoly rho_inv = LaurentPoly::monomial(vol.dim, rinv, Rational(1) / rc);

    MultiVector nu(vol.dim);
    for (const auto& [M, b] : alpha.components()) {
        Mask K = full & ~M;
        // sign of iota_{d_K} dt_full on dt_M
        int sign = 1;
        Mask rem = full;
        for (int i = 31; i >= 0; --i) {
            if (!((K >> i) & 1u)) continue;
            sign *= mask_remove_sign(rem, i + 1);
            rem &= ~(Mask(1) << i);
        }
        nu.add_component(K, (b * rho_inv).scaled(Rational(sign)));
    }
    return nu;
}

MultiVector divergence(const VolumeForm& vol, const MultiVector& gamma) {
    check_dims(vol.dim, gamma.dim(), "divergence");
    DiffForm beta = de_rham(contract(gamma, vol.as_form()));
    return dualize_form(vol, beta);
}

Rational residue_integral(const DiffForm& eta) {
    if (eta.is_zero()) return Rational(0);
    int dim = eta.dim();
    Mask full = full_mask(dim);
    for (const auto& [I, f] : eta.components())
        if (I != full) throw std::invalid_argument("residue_integral: form is not of top rank");
    ExpVec target(static_cast<size_t>(dim), -1);
    return eta.component(full).coefficient(target);
}

Rational pair_vt_form(const VTop& x, const DiffForm& alpha) {
    if (x.is_zero() || alpha.is_zero()) return Rational(0);
    DiffForm inner = contract(x.mv, alpha);
    LaurentPoly scalar = inner.component(0); // only the 0-form part survives against a top form
    if (scalar.is_zero()) return Rational(0);
    DiffForm top = x.vol.as_form().scaled_poly(scalar);
    return residue_integral(top);
}

USeries<Rational> pair_vt_form(const UVTop& x, const UDiffForm& alpha) {
    return useries_convolve(x, alpha, [](const VTop& v, const DiffForm& a) {
        return pair_vt_form(v, a);
    });
}

} // namespace cychains
