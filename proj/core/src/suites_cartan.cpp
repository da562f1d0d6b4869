#include "cychains/cartan.hpp"
#include "cychains/diffop.hpp"

#include "suites_common.hpp"

namespace cychains {

namespace {

Rational residue_top_part(const DiffForm& f) {
    if (f.is_zero() || f.dim() < 0) return Rational(0);
    Mask full = (Mask(1) << f.dim()) - 1u;
    ExpVec target(static_cast<size_t>(f.dim()), -1);
    return f.component(full).coefficient(target);
}

void add(const std::string& id, std::function<TrialOutcome(const SuiteConfig&, uint64_t)> run,
         int trials_override = 0) {
    Identity ident;
    ident.id = "cartan/" + id;
    ident.group = "cartan";
    ident.run = std::move(run);
    ident.trials_override = trials_override;
    SuiteRegistry::instance().add("cartan", ident);
}

} // namespace

void register_cartan_suite() {
    add("contract_algebra_morphism", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/contract_algebra_morphism", trial);
        Gen g(rng, cfg);
        MultiVector a = g.multivector_mixed(), b = g.multivector_mixed();
        DiffForm alpha = g.form_mixed();
        return check_with_shrink(
            [](const MultiVector& x, const MultiVector& y, const DiffForm& al) {
                return contract(wedge(x, y), al) == contract(x, contract(y, al));
            },
            std::pair<const char*, MultiVector>{"gamma", a},
            std::pair<const char*, MultiVector>{"nu", b},
            std::pair<const char*, DiffForm>{"alpha", alpha});
    });

    add("de_rham_square", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/de_rham_square", trial);
        Gen g(rng, cfg);
        DiffForm alpha = g.form_mixed();
        return check_with_shrink(
            [](const DiffForm& al) { return de_rham(de_rham(al)).is_zero(); },
            std::pair<const char*, DiffForm>{"alpha", alpha});
    });

    add("de_rham_leibniz", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/de_rham_leibniz", trial);
        Gen g(rng, cfg);
        int p = g.uniform(0, cfg.dim);
        DiffForm a = g.form(p), b = g.form_mixed();
        int sgn = sign_of(p);
        return check_with_shrink(
            [sgn](const DiffForm& x, const DiffForm& y) {
                DiffForm lhs = de_rham(wedge_form(x, y));
                DiffForm rhs = wedge_form(de_rham(x), y) + wedge_form(x, de_rham(y)).scaled(Rational(sgn));
                return lhs == rhs;
            },
            std::pair<const char*, DiffForm>{"alpha", a}, std::pair<const char*, DiffForm>{"beta", b});
    });

    add("schouten_antisymmetry", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/schouten_antisymmetry", trial);
        Gen g(rng, cfg);
        int ra = g.uniform(0, cfg.dim), rb = g.uniform(0, cfg.dim);
        MultiVector a = g.multivector(ra), b = g.multivector(rb);
        int sgn = sign_of((ra - 1) * (rb - 1));
        return check_with_shrink(
            [sgn](const MultiVector& x, const MultiVector& y) {
                return (schouten(x, y) + schouten(y, x).scaled(Rational(sgn))).is_zero();
            },
            std::pair<const char*, MultiVector>{"gamma", a},
            std::pair<const char*, MultiVector>{"nu", b});
    });

    add("schouten_jacobi", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/schouten_jacobi", trial);
        Gen g(rng, cfg);
        int ra = g.uniform(0, cfg.dim), rb = g.uniform(0, cfg.dim), rc = g.uniform(0, cfg.dim);
        MultiVector a = g.multivector(ra, 2), b = g.multivector(rb, 2), c = g.multivector(rc, 2);
        int sgn = sign_of((ra - 1) * (rb - 1));
        return check_with_shrink(
            [sgn](const MultiVector& x, const MultiVector& y, const MultiVector& z) {
                MultiVector lhs = schouten(x, schouten(y, z));
                MultiVector rhs =
                    schouten(schouten(x, y), z) + schouten(y, schouten(x, z)).scaled(Rational(sgn));
                return lhs == rhs;
            },
            std::pair<const char*, MultiVector>{"gamma", a},
            std::pair<const char*, MultiVector>{"nu", b},
            std::pair<const char*, MultiVector>{"mu", c});
    });

    add("iota_bracket_left", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/iota_bracket_left", trial);
        Gen g(rng, cfg);
        int ra = g.uniform(0, cfg.dim), rb = g.uniform(0, cfg.dim);
        MultiVector a = g.multivector(ra), b = g.multivector(rb);
        DiffForm alpha = g.form_mixed();
        int sgn = sign_of(ra * (rb - 1)); // |iota_gamma| = ra, |L_nu| = rb - 1
        return check_with_shrink(
            [sgn](const MultiVector& x, const MultiVector& y, const DiffForm& al) {
                DiffForm lhs = contract(schouten(x, y), al);
                DiffForm rhs = contract(x, lie_derivative(y, al)) -
                               lie_derivative(y, contract(x, al)).scaled(Rational(sgn));
                return lhs == rhs;
            },
            std::pair<const char*, MultiVector>{"gamma", a},
            std::pair<const char*, MultiVector>{"nu", b},
            std::pair<const char*, DiffForm>{"alpha", alpha});
    });

    add("iota_bracket_right", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/iota_bracket_right", trial);
        Gen g(rng, cfg);
        int ra = g.uniform(0, cfg.dim), rb = g.uniform(0, cfg.dim);
        MultiVector a = g.multivector(ra), b = g.multivector(rb);
        DiffForm alpha = g.form_mixed();
        int outer = sign_of(ra - 1);            // (-1)^{|gamma|}
        int inner = sign_of((ra - 1) * rb);     // |L_gamma| = ra-1, |iota_nu| = rb
        return check_with_shrink(
            [outer, inner](const MultiVector& x, const MultiVector& y, const DiffForm& al) {
                DiffForm lhs = contract(schouten(x, y), al);
                DiffForm commutator = lie_derivative(x, contract(y, al)) -
                                      contract(y, lie_derivative(x, al)).scaled(Rational(inner));
                return lhs == commutator.scaled(Rational(outer));
            },
            std::pair<const char*, MultiVector>{"gamma", a},
            std::pair<const char*, MultiVector>{"nu", b},
            std::pair<const char*, DiffForm>{"alpha", alpha});
    });

    add("divergence_leibniz", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/divergence_leibniz", trial);
        Gen g(rng, cfg);
        int ra = g.uniform(0, cfg.dim), rb = g.uniform(0, cfg.dim);
        MultiVector a = g.multivector(ra), b = g.multivector(rb);
        int sgn = sign_of(ra - 1);
        for (const auto& vol : cfg.volumes()) {
            auto out = check_with_shrink(
                [&vol, sgn](const MultiVector& x, const MultiVector& y) {
                    MultiVector lhs = divergence(vol, schouten(x, y));
                    MultiVector rhs = schouten(divergence(vol, x), y) +
                                      schouten(x, divergence(vol, y)).scaled(Rational(sgn));
                    return lhs == rhs;
                },
                std::pair<const char*, MultiVector>{"gamma1", a},
                std::pair<const char*, MultiVector>{"gamma2", b});
            if (!out.pass) {
                out.counterexample += "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("bv_generator", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/bv_generator", trial);
        Gen g(rng, cfg);
        int ra = g.uniform(0, cfg.dim), rb = g.uniform(0, cfg.dim);
        MultiVector a = g.multivector(ra), b = g.multivector(rb);
        int sgn = sign_of(ra - 1);
        for (const auto& vol : cfg.volumes()) {
            auto out = check_with_shrink(
                [&vol, sgn](const MultiVector& x, const MultiVector& y) {
                    // [x,y]_S = (-1)^{k1-1} (div(x^y) - div(x)^y) + x^div(y),
                    // the divergence generating the bracket on the wedge
                    MultiVector defect =
                        (divergence(vol, wedge(x, y)) - wedge(divergence(vol, x), y))
                            .scaled(Rational(sgn)) +
                        wedge(x, divergence(vol, y));
                    return schouten(x, y) == defect;
                },
                std::pair<const char*, MultiVector>{"gamma", a},
                std::pair<const char*, MultiVector>{"nu", b});
            if (!out.pass) {
                out.counterexample += "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("divergence_squares_to_zero", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/divergence_squares_to_zero", trial);
        Gen g(rng, cfg);
        MultiVector a = g.multivector_mixed();
        for (const auto& vol : cfg.volumes()) {
            auto out = check_with_shrink(
                [&vol](const MultiVector& x) { return divergence(vol, divergence(vol, x)).is_zero(); },
                std::pair<const char*, MultiVector>{"gamma", a});
            if (!out.pass) {
                out.counterexample += "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("divergence_defining_display", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/divergence_defining_display", trial);
        Gen g(rng, cfg);
        MultiVector a = g.multivector_mixed();
        for (const auto& vol : cfg.volumes()) {
            auto out = check_with_shrink(
                [&vol](const MultiVector& x) {
                    return contract(divergence(vol, x), vol.as_form()) ==
                           de_rham(contract(x, vol.as_form()));
                },
                std::pair<const char*, MultiVector>{"nu", a});
            if (!out.pass) {
                out.counterexample += "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("integral_contract_vs_wedge", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/integral_contract_vs_wedge", trial);
        Gen g(rng, cfg);
        int r = g.uniform(0, cfg.dim);
        MultiVector a = g.multivector(r);
        DiffForm alpha = g.form(r);
        for (const auto& vol : cfg.volumes()) {
            auto out = check_with_shrink(
                [&vol](const MultiVector& x, const DiffForm& al) {
                    Rational lhs = pair_vt_form(VTop(x, vol), al);
                    Rational rhs = residue_top_part(wedge_form(al, contract(x, vol.as_form())));
                    return lhs == rhs;
                },
                std::pair<const char*, MultiVector>{"gamma", a},
                std::pair<const char*, DiffForm>{"alpha", alpha});
            if (!out.pass) {
                out.counterexample += "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("integral_lie_vs_divergence", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/integral_lie_vs_divergence", trial);
        Gen g(rng, cfg);
        int r = g.uniform(1, cfg.dim);
        MultiVector a = g.multivector(r);
        DiffForm alpha = g.form(r - 1);
        for (const auto& vol : cfg.volumes()) {
            auto out = check_with_shrink(
                [&vol](const MultiVector& x, const DiffForm& al) {
                    DiffForm lie = lie_derivative(x, al);
                    Rational lhs = residue_integral(vol.as_form().scaled_poly(lie.component(0)));
                    DiffForm io = contract(divergence(vol, x), al);
                    Rational rhs = -residue_integral(vol.as_form().scaled_poly(io.component(0)));
                    return lhs == rhs;
                },
                std::pair<const char*, MultiVector>{"gamma", a},
                std::pair<const char*, DiffForm>{"alpha", alpha});
            if (!out.pass) {
                out.counterexample += "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("residue_vanishes_on_exact", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/residue_vanishes_on_exact", trial);
        Gen g(rng, cfg);
        DiffForm beta = g.form(cfg.dim - 1);
        return check_with_shrink(
            [](const DiffForm& b) { return residue_top_part(de_rham(b)).is_zero(); },
            std::pair<const char*, DiffForm>{"beta", beta});
    });

    add("pairing_nondegeneracy_witness", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/pairing_nondegeneracy_witness", trial);
        Gen g(rng, cfg);
        MultiVector a = g.multivector_mixed();
        for (const auto& vol : cfg.volumes()) {
            if (a.is_zero()) continue;
            // construct a separating form for some nonzero component
            const auto& [mask, poly] = *a.components().begin();
            const auto& [f, coef] = *poly.terms().begin();
            ExpVec probe(f);
            for (size_t i = 0; i < probe.size(); ++i) probe[i] = -f[i] - vol.k[i];
            DiffForm alpha = DiffForm::basis(cfg.dim, mask, LaurentPoly::monomial(cfg.dim, probe, Rational(1)));
            if (pair_vt_form(VTop(a, vol), alpha).is_zero()) {
                TrialOutcome bad;
                bad.pass = false;
                bad.counterexample = "no separating form found for x = " + a.str() +
                                     " against volume " + vol.str();
                return bad;
            }
        }
        return TrialOutcome{};
    });

    add("formal_adjoint_pairing", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "cartan/formal_adjoint_pairing", trial);
        Gen g(rng, cfg);
        DiffOp d = g.diffop(2, 2);
        LaurentPoly f = g.poly(), h = g.poly();
        for (const auto& vol : cfg.volumes()) {
            DiffOp adj = formal_adjoint_diffop(d, vol);
            auto out = check_with_shrink(
                [&](const LaurentPoly& x, const LaurentPoly& y) {
                    return residue_pair(d.apply(x), y, vol) == residue_pair(x, adj.apply(y), vol);
                },
                std::pair<const char*, LaurentPoly>{"f", f},
                std::pair<const char*, LaurentPoly>{"g", h});
            if (!out.pass) {
                out.counterexample += "; D = " + d.str() + "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });
}

} // namespace cychains
