#include "cychains/linfty.hpp"

#include <stdexcept>

namespace cychains {

namespace {

int sgn_deg(int deg) { return (deg % 2 + 2) % 2 == 0 ? 1 : -1; }

} // namespace

AlgebraFamily<UMultiVector> schouten_algebra_family(const VolumeForm& vol) {
    return dgla_to_linfty<UMultiVector>(
        [vol](const Graded<UMultiVector>& x) {
            return x.value.map([&](const MultiVector& m) { return divergence(vol, m); }).shifted_up(1);
        },
        [](const Graded<UMultiVector>& x, const Graded<UMultiVector>& y) {
            return schouten(x.value, y.value);
        });
}

AlgebraFamily<UMultiVector> schouten_algebra_family_broken(const VolumeForm& vol) {
    AlgebraFamily<UMultiVector> q = schouten_algebra_family(vol);
    q.coeffs[2] = [](std::span<const Graded<UMultiVector>> xs) {
        return schouten(xs[0].value, xs[1].value).scaled(Rational(-1));
    };
    return q;
}

AlgebraFamily<UMultiVector> wedge_nonjacobi_family(const VolumeForm& vol) {
    AlgebraFamily<UMultiVector> q = schouten_algebra_family(vol);
    q.coeffs[2] = [](std::span<const Graded<UMultiVector>> xs) {
        return useries_convolve(xs[0].value, xs[1].value,
                                [](const MultiVector& a, const MultiVector& b) { return wedge(a, b); })
            .scaled(Rational(-sgn_deg(xs[0].degree)));
    };
    return q;
}

AlgebraFamily<MultiDiffOp> gerstenhaber_algebra_family() {
    return dgla_to_linfty<MultiDiffOp>(
        [](const Graded<MultiDiffOp>& x) { return cochain_differential(x.value); },
        [](const Graded<MultiDiffOp>& x, const Graded<MultiDiffOp>& y) {
            if (x.value.is_zero() || y.value.is_zero()) return MultiDiffOp();
            return gerstenhaber(x.value, y.value);
        });
}

ModuleFamily<UMultiVector, UDiffForm> forms_action_module(const VolumeForm& vol, const Rational& t) {
    return module_to_linfty<UMultiVector, UDiffForm>(
        [](const Graded<UDiffForm>& m) { return u_d(m.value); },
        [vol, t](const Graded<UMultiVector>& x, const Graded<UDiffForm>& m) {
            return action_Lt(vol, t, x.value, m.value);
        });
}

ModuleFamily<UMultiVector, UDiffForm> forms_action_module_broken(const VolumeForm& vol) {
    ModuleFamily<UMultiVector, UDiffForm> qt = forms_action_module(vol, Rational(1));
    qt.coeffs[1] = [vol](std::span<const Graded<UMultiVector>> xs, const Graded<UDiffForm>& m) {
        // t = 1 with the iota_{div} correction dropped: plain Lie terms only
        const UMultiVector& g = xs[0].value;
        const UDiffForm& a = m.value;
        if (g.ucap() < 0 || a.ucap() < 0) return UDiffForm();
        int cap = std::min(g.ucap(), a.ucap());
        UDiffForm r = UDiffForm::zero(cap);
        for (int j = 0; j <= cap; ++j) {
            if (g.coeff(j).is_zero()) continue;
            const MultiVector& gj = g.coeff(j);
            r = r + a.map([&](const DiffForm& f) { return lie_derivative(gj, f); })
                        .shifted_up(j)
                        .truncated(cap);
        }
        return r.scaled(Rational(-sgn_deg(xs[0].degree)));
    };
    return qt;
}

ModuleFamily<UMultiVector, UVTop> vtop_dual_module(const VolumeForm& vol, const Rational& t) {
    return module_to_linfty<UMultiVector, UVTop>(
        [](const Graded<UVTop>& m) { return dual_differential(m.value); },
        [vol, t](const Graded<UMultiVector>& x, const Graded<UVTop>& m) {
            return action_Lt_dual(vol, t, x.value, m.value);
        });
}

ModuleFamily<UMultiVector, UMultiVector> trivial_module(const VolumeForm& vol) {
    ModuleFamily<UMultiVector, UMultiVector> qt;
    qt.coeffs.resize(1);
    qt.coeffs[0] = [vol](std::span<const Graded<UMultiVector>>, const Graded<UMultiVector>& m) {
        return m.value.map([&](const MultiVector& x) { return divergence(vol, x); }).shifted_up(1);
    };
    return qt;
}

namespace {

UHochChain cyclic_chain_differential(const Graded<UHochChain>& m) {
    UHochChain b = m.value.map([](const HochChain& c) { return chain_boundary(c); });
    UHochChain ub = m.value.map([](const HochChain& c) { return connes_B(c); }).shifted_up(1);
    return b + ub;
}

} // namespace

ModuleFamily<MultiDiffOp, UHochChain> chains_module_over_cochains() {
    return module_to_linfty<MultiDiffOp, UHochChain>(
        cyclic_chain_differential,
        [](const Graded<MultiDiffOp>& x, const Graded<UHochChain>& m) {
            if (x.value.is_zero()) return UHochChain();
            return m.value.map([&](const HochChain& c) { return cochain_action(x.value, c); });
        });
}

ModuleFamily<MultiVector, UDiffForm> lie_module_plain() {
    return module_to_linfty<MultiVector, UDiffForm>(
        [](const Graded<UDiffForm>& m) { return u_d(m.value); },
        [](const Graded<MultiVector>& x, const Graded<UDiffForm>& m) {
            const MultiVector& g = x.value;
            return m.value.map([&](const DiffForm& a) { return lie_derivative(g, a); });
        });
}

ModuleFamily<UMultiVector, UHochChain> chains_module_standin() {
    return module_to_linfty<UMultiVector, UHochChain>(
        cyclic_chain_differential,
        [](const Graded<UMultiVector>& x, const Graded<UHochChain>& m) {
            if (x.value.ucap() < 0) return UHochChain();
            const MultiVector& g0 = x.value.coeff(0); // pullback along u = 0
            if (g0.is_zero()) return UHochChain();
            MultiDiffOp d = hkr_cochain(g0);
            return m.value.map([&](const HochChain& c) { return cochain_action(d, c); });
        });
}

MorphismFamily<UMultiVector, UDiffForm, UDiffForm> h1_morphism_family(int s) {
    MorphismFamily<UMultiVector, UDiffForm, UDiffForm> phi;
    phi.coeffs.resize(4);
    for (size_t n = 0; n < phi.coeffs.size(); ++n) {
        phi.coeffs[n] = [s](std::span<const Graded<UMultiVector>> xs, const Graded<UDiffForm>& m) {
            std::vector<UMultiVector> gs;
            std::vector<int> degs;
            gs.reserve(xs.size());
            degs.reserve(xs.size());
            for (const auto& x : xs) {
                gs.push_back(x.value);
                degs.push_back(x.degree);
            }
            return H1_taylor(s, gs, degs, m.value);
        };
    }
    return phi;
}

MorphismFamily<UMultiVector, UHochChain, UDiffForm> hkr_chain_morphism() {
    MorphismFamily<UMultiVector, UHochChain, UDiffForm> phi;
    phi.coeffs.resize(1);
    phi.coeffs[0] = [](std::span<const Graded<UMultiVector>>, const Graded<UHochChain>& m) {
        return m.value.map([](const HochChain& c) { return hkr_chains(c); });
    };
    return phi;
}

namespace {

// sign of iota_{d_J}(dt_J)
int basis_contraction_sign(int dim, Mask j) {
    MultiVector mv = MultiVector::basis(dim, j, LaurentPoly::constant(dim, Rational(1)));
    DiffForm f = DiffForm::basis(dim, j, LaurentPoly::constant(dim, Rational(1)));
    Rational c = contract(mv, f).component(0).constant_term();
    if (c.is_zero()) throw std::logic_error("basis_contraction_sign: degenerate");
    return c == Rational(1) ? 1 : -1;
}

// exponent shift: <nu Omega, t^e dt_J> reads off [nu_J]_{-e-k}
ExpVec probe_exponent(const VolumeForm& vol, const ExpVec& f) {
    ExpVec e(f);
    for (size_t i = 0; i < e.size(); ++i) e[i] = -f[i] - vol.k[i];
    return e;
}

void for_each_window_exp(int dim, int lo, int hi, const std::function<void(const ExpVec&)>& fn) {
    ExpVec cur(static_cast<size_t>(dim), lo);
    while (true) {
        fn(cur);
        int i = 0;
        while (i < dim) {
            if (cur[static_cast<size_t>(i)] < hi) {
                ++cur[static_cast<size_t>(i)];
                break;
            }
            cur[static_cast<size_t>(i)] = lo;
            ++i;
        }
        if (i == dim) break;
    }
}

} // namespace

ModuleFamily<UMultiVector, UVTop> adjoint_module_on_vtop(ModuleFamily<UMultiVector, UDiffForm> qt,
                                                         const VolumeForm& vol, ProbeWindow win) {
    ModuleFamily<UMultiVector, UVTop> out;
    out.coeffs.resize(qt.coeffs.size());
    for (size_t n = 0; n < qt.coeffs.size(); ++n) {
        if (!qt.has(n)) continue;
        out.coeffs[n] = [qt, vol, win, n](std::span<const Graded<UMultiVector>> xs,
                                          const Graded<UVTop>& mhat) {
            if (mhat.value.ucap() < 0) return UVTop();
            long sum_x = 0;
            for (const auto& x : xs) sum_x += x.degree;
            int front = -sign_pow(static_cast<long>(mhat.degree) * (static_cast<long>(n) + 1 + sum_x));
            int dim = vol.dim;
            UVTop xi = UVTop::zero(win.ucap);
            bool cap_known = false;
            int cap = win.ucap;
            for (Mask j = 0; j < (Mask(1) << dim); ++j) {
                int eps = basis_contraction_sign(dim, j);
                for_each_window_exp(dim, win.lo, win.hi, [&](const ExpVec& f) {
                    UDiffForm probe = UDiffForm::embed(
                        win.ucap,
                        DiffForm::basis(dim, j, LaurentPoly::monomial(dim, probe_exponent(vol, f),
                                                                      Rational(1))));
                    Graded<UDiffForm> gp{probe, -mask_rank(j)};
                    UDiffForm img = qt.coeffs[n](xs, gp);
                    USeries<Rational> rhs =
                        pair_vt_form(mhat.value, img).scaled(Rational(front) / (Rational(eps) * vol.c));
                    if (!cap_known && rhs.ucap() >= 0) {
                        cap = std::min(cap, rhs.ucap());
                        cap_known = true;
                    }
                    for (int u = 0; u <= std::min(cap, rhs.ucap()); ++u) {
                        if (rhs.coeff(u).is_zero()) continue;
                        if (u <= xi.ucap())
                            xi.coeff(u) = xi.coeff(u) +
                                          VTop(MultiVector::basis(dim, j,
                                                                  LaurentPoly::monomial(dim, f, rhs.coeff(u))),
                                               vol);
                    }
                });
            }
            return xi.truncated(cap);
        };
    }
    return out;
}

ModuleFamily<UMultiVector, UDiffForm> adjoint_module_on_forms(ModuleFamily<UMultiVector, UVTop> qt,
                                                              const VolumeForm& vol, ProbeWindow win) {
    ModuleFamily<UMultiVector, UDiffForm> out;
    out.coeffs.resize(qt.coeffs.size());
    for (size_t n = 0; n < qt.coeffs.size(); ++n) {
        if (!qt.has(n)) continue;
        out.coeffs[n] = [qt, vol, win, n](std::span<const Graded<UMultiVector>> xs,
                                          const Graded<UDiffForm>& mhat) {
            if (mhat.value.ucap() < 0) return UDiffForm();
            long sum_x = 0;
            for (const auto& x : xs) sum_x += x.degree;
            int front = -sign_pow(static_cast<long>(mhat.degree) * (static_cast<long>(n) + 1 + sum_x));
            int dim = vol.dim;
            UDiffForm xi = UDiffForm::zero(win.ucap);
            bool cap_known = false;
            int cap = win.ucap;
            // materialize through the defining identity:
            // [alpha_J]_f per u power = front * <Qt_n(xs; probe(J,f)), mhat> / (eps_J c)
            for (Mask j = 0; j < (Mask(1) << dim); ++j) {
                int eps = basis_contraction_sign(dim, j);
                for_each_window_exp(dim, win.lo, win.hi, [&](const ExpVec& f) {
                    UVTop probe = UVTop::embed(
                        win.ucap,
                        VTop(MultiVector::basis(dim, j, LaurentPoly::monomial(dim, probe_exponent(vol, f),
                                                                              Rational(1))),
                             vol));
                    Graded<UVTop> gp{probe, mask_rank(j) - 1};
                    UVTop img = qt.coeffs[n](xs, gp);
                    USeries<Rational> rhs =
                        pair_vt_form(img, mhat.value).scaled(Rational(front) / (Rational(eps) * vol.c));
                    if (!cap_known && rhs.ucap() >= 0) {
                        cap = std::min(cap, rhs.ucap());
                        cap_known = true;
                    }
                    for (int u = 0; u <= std::min(cap, rhs.ucap()); ++u) {
                        if (rhs.coeff(u).is_zero()) continue;
                        if (u <= xi.ucap())
                            xi.coeff(u) =
                                xi.coeff(u) +
                                DiffForm::basis(dim, j, LaurentPoly::monomial(dim, f, rhs.coeff(u)));
                    }
                });
            }
            return xi.truncated(cap);
        };
    }
    return out;
}

USeries<Rational> adjoint_morphism_pairing(
    const MorphismFamily<UMultiVector, UHochChain, UDiffForm>& phi,
    std::span<const Graded<UMultiVector>> xs, const Graded<UVTop>& nhat, const UHochChain& c) {
    long sum_x = 0;
    for (const auto& x : xs) sum_x += x.degree;
    // degree of a chain argument is irrelevant for the evaluation itself;
    // carry the homogeneous degree when available
    int cdeg = 0;
    for (int j = 0; j <= c.ucap(); ++j) {
        auto d = c.coeff(j).degree();
        if (d) {
            cdeg = *d + 2 * j;
            break;
        }
    }
    Graded<UHochChain> m{c, cdeg};
    UDiffForm img = phi.apply(xs.size(), xs, m).value;
    int out_deg = nhat.degree + static_cast<int>(sum_x) - static_cast<int>(xs.size());
    int sgn = sign_pow(static_cast<long>(out_deg) * (static_cast<long>(xs.size()) + sum_x));
    return pair_vt_form(nhat.value, img).scaled(Rational(sgn));
}

EElement Reinterpreted::coefficient(std::span<const Graded<UMultiVector>> xs,
                                    const MultiVector& gamma, int ucap) const {
    if (!v.has(xs.size() + 1)) return EElement(vol.dim);
    // feed u * gamma into the last algebra slot
    std::vector<Graded<UMultiVector>> args(xs.begin(), xs.end());
    auto deg = gamma.degree();
    if (!deg) throw std::invalid_argument("Reinterpreted::coefficient: homogeneous input required");
    args.push_back(Graded<UMultiVector>{UMultiVector::embed(ucap, gamma, 1), *deg + 2});
    ChainOp lam = v.coeffs[xs.size() + 1](args);
    return chainop_to_eelement(lam, vol);
}

Reinterpreted reinterpret_chain_morphism(ChainMorphism v, const VolumeForm& vol) {
    Reinterpreted r;
    r.vol = vol;
    r.v = std::move(v);
    return r;
}

USeries<EElement> oh_target_coefficient(size_t n, std::span<const Graded<UMultiVector>> xs,
                                        const ChainOp& lam, int lam_degree, const VolumeForm& vol,
                                        int ucap) {
    long sum_x = 0;
    for (const auto& x : xs) sum_x += x.degree;
    int front = -sign_pow(static_cast<long>(lam_degree) * (static_cast<long>(n) + 1 + sum_x));
    USeries<EElement> out(ucap);
    if (n == 0) {
        // lambda o (b_H + u B), dualized
        EElement b0 = chainop_to_eelement(precompose_boundary(lam), vol);
        EElement b1 = chainop_to_eelement(precompose_connes_B(lam), vol);
        out = USeries<EElement>::embed(ucap, b0.scaled(Rational(front))) +
              USeries<EElement>::embed(ucap, b1.scaled(Rational(front)), 1);
        out = out + USeries<EElement>::embed(ucap, extended_nabla(chainop_to_eelement(lam, vol)));
        return out;
    }
    if (n == 1) {
        // lambda o P_1(x; .) with the stand-in action through u = 0
        if (xs[0].value.ucap() < 0) return out;
        const MultiVector& g0 = xs[0].value.coeff(0);
        if (g0.is_zero()) return out;
        MultiDiffOp d = hkr_cochain(g0);
        ChainOp comp = precompose_action(lam, d).scaled(Rational(-sgn_deg(xs[0].degree)));
        return USeries<EElement>::embed(ucap, chainop_to_eelement(comp, vol).scaled(Rational(front)));
    }
    return out;
}

} // namespace cychains
