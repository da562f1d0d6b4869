#include "cychains/uactions.hpp"

#include <stdexcept>

namespace cychains {

UMultiVector scale_u(const Rational& t, const UMultiVector& gamma) {
    UMultiVector r = gamma;
    Rational pw(1);
    for (int j = 0; j <= r.ucap(); ++j) {
        r.coeff(j) = r.coeff(j).scaled(pw);
        pw *= t;
    }
    return r;
}

UDiffForm contract_u(const MultiVector& gamma, const UDiffForm& alpha) {
    return alpha.map([&](const DiffForm& a) { return contract(gamma, a); });
}

UDiffForm contract_u(const UMultiVector& gamma, const UDiffForm& alpha) {
    return useries_convolve(gamma, alpha,
                            [](const MultiVector& g, const DiffForm& a) { return contract(g, a); });
}

UDiffForm de_rham_u(const UDiffForm& alpha) {
    return alpha.map([](const DiffForm& a) { return de_rham(a); });
}

UDiffForm u_d(const UDiffForm& alpha) { return de_rham_u(alpha).shifted_up(1); }

UDiffForm iota_t(const Rational& t, const UMultiVector& gamma, const UDiffForm& alpha) {
    return contract_u(scale_u(t, gamma), alpha);
}

UDiffForm action_Lt(const VolumeForm& vol, const Rational& t, const UMultiVector& gamma,
                    const UDiffForm& alpha) {
    if (alpha.ucap() < 0 || gamma.ucap() < 0) return UDiffForm();
    int cap = std::min(alpha.ucap(), gamma.ucap());
    UDiffForm r = UDiffForm::zero(cap);
    Rational tj(1); // t^j
    for (int j = 0; j <= cap; ++j) {
        const MultiVector& gj = gamma.coeff(j);
        if (!gj.is_zero()) {
            UDiffForm lie = alpha.map([&](const DiffForm& a) { return lie_derivative(gj, a); });
            UDiffForm io = alpha.map([&](const DiffForm& a) { return contract(divergence(vol, gj), a); });
            r = r + lie.scaled(tj).shifted_up(j).truncated(cap) +
                io.scaled(tj * t).shifted_up(j).truncated(cap);
        }
        tj *= t;
    }
    return r;
}

UDiffForm action_Lt_via_div_u(const VolumeForm& vol, const Rational& t, const UMultiVector& gamma,
                              const UDiffForm& alpha) {
    int g = 0;
    {
        auto deg = useries_degree(gamma);
        if (!deg) throw std::invalid_argument("action_Lt_via_div_u: homogeneous input required");
        g = *deg;
    }
    // [u d, iota^(t)] with iota of operator parity g+1
    UDiffForm commutator = u_d(iota_t(t, gamma, alpha));
    int sgn = ((g + 1) % 2 + 2) % 2 == 0 ? 1 : -1; // (-1)^{|ud||iota|} = (-1)^{g+1}
    commutator = commutator - iota_t(t, gamma, u_d(alpha)).scaled(Rational(sgn));
    // + iota^(t)_{u div gamma}
    UMultiVector udiv = gamma.map([&](const MultiVector& x) { return divergence(vol, x); }).shifted_up(1);
    UDiffForm total = commutator + iota_t(t, udiv, alpha);
    return total.div_u();
}

UVTop action_Lt_dual(const VolumeForm& vol, const Rational& t, const UMultiVector& gamma,
                     const UVTop& x) {
    if (x.ucap() < 0 || gamma.ucap() < 0) return UVTop();
    for (int j = 0; j <= x.ucap(); ++j)
        if (!x.coeff(j).is_zero() && !(x.coeff(j).vol == vol))
            throw std::invalid_argument("action_Lt_dual: volume form mismatch");
    int cap = std::min(gamma.ucap(), x.ucap());
    UVTop r = UVTop::zero(cap);
    Rational tj(1);
    for (int j = 0; j <= cap; ++j) {
        const MultiVector& gj = gamma.coeff(j);
        if (!gj.is_zero()) {
            // per wedge rank of gamma_j, the display's (-1)^{|gamma_j|}
            for (const auto& [I, f] : gj.components()) {
                MultiVector part = MultiVector::basis(gj.dim(), I, f);
                int sgn = (mask_rank(I) - 1) % 2 == 0 ? 1 : -1;
                MultiVector dv = divergence(vol, part);
                UVTop term = x.map([&](const VTop& v) {
                    if (v.is_zero()) return VTop(MultiVector(gj.dim()), vol);
                    MultiVector out = schouten(part, v.mv);
                    out += wedge(dv, v.mv).scaled(Rational(sgn) * (Rational(1) - t));
                    return VTop(out, vol);
                });
                r = r + term.scaled(tj).shifted_up(j).truncated(cap);
            }
        }
        tj *= t;
    }
    return r;
}

UVTop dual_differential(const UVTop& x) {
    return x.map([](const VTop& v) {
                 if (v.is_zero()) return v;
                 return VTop(divergence(v.vol, v.mv), v.vol);
             })
        .shifted_up(1);
}

UDiffForm h_t(const Rational& t, const UMultiVector& gamma, const UDiffForm& alpha) {
    if (alpha.ucap() < 0 || gamma.ucap() < 0) return UDiffForm();
    int cap = std::min(alpha.ucap(), gamma.ucap());
    if (cap == 0) return UDiffForm::zero(cap);
    UDiffForm r = UDiffForm::zero(cap - 1);
    Rational tj(1); // t^{j-1}
    for (int j = 1; j <= cap; ++j) {
        const MultiVector& gj = gamma.coeff(j);
        if (!gj.is_zero()) {
            UDiffForm io = alpha.map([&](const DiffForm& a) { return contract(gj, a); });
            r = r + io.scaled(tj * Rational(-j)).shifted_up(j - 1).truncated(cap - 1);
        }
        tj *= t;
    }
    return r;
}

TPoly<UDiffForm> iota_t_poly(const UMultiVector& gamma, const UDiffForm& alpha) {
    TPoly<UDiffForm> r;
    if (alpha.ucap() < 0 || gamma.ucap() < 0) return r;
    int cap = std::min(alpha.ucap(), gamma.ucap());
    for (int j = 0; j <= cap; ++j) {
        const MultiVector& gj = gamma.coeff(j);
        if (gj.is_zero()) continue;
        UDiffForm io = alpha.map([&](const DiffForm& a) { return contract(gj, a); });
        r.add(j, io.shifted_up(j).truncated(cap));
    }
    return r;
}

TPoly<UDiffForm> action_Lt_poly(const VolumeForm& vol, const UMultiVector& gamma,
                                const UDiffForm& alpha) {
    TPoly<UDiffForm> r;
    if (alpha.ucap() < 0 || gamma.ucap() < 0) return r;
    int cap = std::min(alpha.ucap(), gamma.ucap());
    for (int j = 0; j <= cap; ++j) {
        const MultiVector& gj = gamma.coeff(j);
        if (gj.is_zero()) continue;
        UDiffForm lie = alpha.map([&](const DiffForm& a) { return lie_derivative(gj, a); });
        UDiffForm io = alpha.map([&](const DiffForm& a) { return contract(divergence(vol, gj), a); });
        r.add(j, lie.shifted_up(j).truncated(cap));
        r.add(j + 1, io.shifted_up(j).truncated(cap));
    }
    return r;
}

TPoly<UDiffForm> h_t_poly(const UMultiVector& gamma, const UDiffForm& alpha) {
    TPoly<UDiffForm> r;
    if (alpha.ucap() < 0 || gamma.ucap() < 0) return r;
    int cap = std::min(alpha.ucap(), gamma.ucap());
    if (cap == 0) return r;
    for (int j = 1; j <= cap; ++j) {
        const MultiVector& gj = gamma.coeff(j);
        if (gj.is_zero()) continue;
        UDiffForm io = alpha.map([&](const DiffForm& a) { return contract(gj, a); });
        r.add(j - 1, io.scaled(Rational(-j)).shifted_up(j - 1).truncated(cap - 1));
    }
    return r;
}

TPoly<UDiffForm> h_t_poly_via_div_u(const UMultiVector& gamma, const UDiffForm& alpha) {
    TPoly<UDiffForm> io = iota_t_poly(gamma, alpha).ddt();
    TPoly<UDiffForm> r;
    for (int k = 0; k <= io.tdeg(); ++k) {
        UDiffForm c = io.coeff(k);
        if (c.ucap() < 0) continue;
        r.add(k, -(c.div_u()));
    }
    return r;
}

UDiffForm iota_plus_div_u(const UMultiVector& gamma, const UDiffForm& alpha) {
    if (alpha.ucap() < 0 || gamma.ucap() < 0) return UDiffForm();
    int cap = std::min(alpha.ucap(), gamma.ucap());
    UDiffForm acc = UDiffForm::zero(cap);
    for (int j = 1; j <= cap; ++j) {
        const MultiVector& gj = gamma.coeff(j);
        if (gj.is_zero()) continue;
        acc = acc + alpha.map([&](const DiffForm& a) { return contract(gj, a); })
                        .shifted_up(j)
                        .truncated(cap);
    }
    return acc.div_u();
}

UDiffForm H1_taylor(int s, std::span<const UMultiVector> gammas, std::span<const int> degrees,
                    const UDiffForm& alpha) {
    if (gammas.size() != degrees.size())
        throw std::invalid_argument("H1_taylor: degree count mismatch");
    // ordered composite of the commuting factors; the 1/n! of the
    // exponential cancels against the n! equal orderings when the
    // coefficient is read off the symmetric word
    UDiffForm acc = alpha;
    for (size_t i = gammas.size(); i-- > 0;) {
        int sgn = s * (((degrees[i] % 2) + 2) % 2 == 0 ? 1 : -1);
        acc = iota_plus_div_u(gammas[i], acc).scaled(Rational(sgn));
    }
    return acc;
}

UDiffForm H1_taylor(int s, std::span<const UMultiVector> gammas, const UDiffForm& alpha) {
    std::vector<int> degrees;
    degrees.reserve(gammas.size());
    for (const auto& g : gammas) {
        auto deg = useries_degree(g);
        if (!deg) {
            if (g.is_zero()) {
                deg = 0; // zero annihilates the whole product
            } else {
                throw std::invalid_argument("H1_taylor: homogeneous input required");
            }
        }
        degrees.push_back(*deg);
    }
    return H1_taylor(s, gammas, degrees, alpha);
}

} // namespace cychains
