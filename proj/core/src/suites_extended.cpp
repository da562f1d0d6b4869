#include "cychains/extended.hpp"
#include "cychains/symbol.hpp"

#include "suites_common.hpp"

namespace cychains {

namespace {

void add(const std::string& id, std::function<TrialOutcome(const SuiteConfig&, uint64_t)> run,
         int trials_override = 0, bool control = false) {
    Identity ident;
    ident.id = (control ? "control/" : "extended/") + id;
    ident.group = "extended";
    ident.run = std::move(run);
    ident.trials_override = trials_override;
    ident.control = control;
    SuiteRegistry::instance().add("extended", ident);
}

// extended_b with the wrap-around sign flipped, a planted defect
EElement extended_b_wrong_wrap(const EElement& e) {
    EElement r(e.dim());
    for (const auto& [k, c] : e.terms()) {
        int n = static_cast<int>(k.slots.size()) - 1;
        for (int i = 0; i <= n; ++i) {
            const MultiIdx& alpha = k.slots[static_cast<size_t>(i)];
            for (const auto& mu : midx_splits(alpha)) {
                MultiIdx rest(alpha);
                for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                EKey t;
                t.form_mask = k.form_mask;
                for (int j = 0; j < i; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                t.slots.push_back(mu);
                t.slots.push_back(rest);
                for (int j = i + 1; j <= n; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                r.add_term(t, c.scaled(midx_binom(alpha, mu) * Rational(i % 2 ? -1 : 1)));
            }
        }
        {
            const MultiIdx& alpha = k.slots[0];
            for (const auto& mu : midx_splits(alpha)) {
                MultiIdx rest(alpha);
                for (size_t a = 0; a < rest.size(); ++a) rest[a] -= mu[a];
                EKey t;
                t.form_mask = k.form_mask;
                t.slots.push_back(rest);
                for (int j = 1; j <= n; ++j) t.slots.push_back(k.slots[static_cast<size_t>(j)]);
                t.slots.push_back(mu);
                // sign flip: (-1)^n instead of (-1)^{n+1}
                r.add_term(t, c.scaled(midx_binom(alpha, mu) * Rational(n % 2 ? -1 : 1)));
            }
        }
    }
    return r;
}

EElement symmetrize(const EElement& e) {
    EElement out(e.dim());
    for (int n : e.arities()) {
        EElement part = e.arity_part(n);
        EElement rot = part;
        for (int j = 0; j < n; ++j) {
            out = out + rot;
            rot = cyclic_sigma(rot);
        }
    }
    return out;
}

} // namespace

void register_extended_suite() {
    add("b_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/b_squares", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(0, 2), g.uniform(0, cfg.dim), 2, 2, false);
        return check_with_shrink(
            [](const EElement& x) { return extended_b(extended_b(x)).is_zero(); },
            std::pair<const char*, EElement>{"e", e});
    });

    add("nabla_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/nabla_squares", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(0, 2), g.uniform(0, cfg.dim), 2, 2, false);
        return check_with_shrink(
            [](const EElement& x) { return extended_nabla(extended_nabla(x)).is_zero(); },
            std::pair<const char*, EElement>{"e", e});
    });

    add("b_nabla_anticommute", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/b_nabla_anticommute", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(0, 2), g.uniform(0, cfg.dim), 2, 2, false);
        return check_with_shrink(
            [](const EElement& x) {
                return (extended_b(extended_nabla(x)) + extended_nabla(extended_b(x))).is_zero();
            },
            std::pair<const char*, EElement>{"e", e});
    });

    add("sigma_order", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/sigma_order", trial);
        Gen g(rng, cfg);
        int arity = g.uniform(0, 3);
        EElement e = g.eelement(arity, g.uniform(0, cfg.dim), 2, 2, false);
        return check_with_shrink(
            [arity](const EElement& x) {
                EElement rot = x;
                for (int j = 0; j <= arity; ++j) rot = cyclic_sigma(rot);
                return rot == x;
            },
            std::pair<const char*, EElement>{"e", e});
    });

    add("sigma_commutes_with_nabla", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/sigma_commutes_with_nabla", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(0, 2), g.uniform(0, cfg.dim), 2, 2, false);
        return check_with_shrink(
            [](const EElement& x) {
                return cyclic_sigma(extended_nabla(x)) == extended_nabla(cyclic_sigma(x));
            },
            std::pair<const char*, EElement>{"e", e});
    });

    add("sigma_commutes_with_b_on_invariants", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/sigma_commutes_with_b_on_invariants", trial);
        Gen g(rng, cfg);
        EElement e = symmetrize(g.eelement(g.uniform(0, 2), g.uniform(0, cfg.dim), 2, 2, false));
        return check_with_shrink(
            [](const EElement& x) {
                EElement bx = extended_b(x);
                return cyclic_sigma(bx) == bx && extended_b(cyclic_sigma(x)) == bx;
            },
            std::pair<const char*, EElement>{"e_sym", e});
    });

    add("connes_B_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/connes_B_squares", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(1, 3), g.uniform(0, cfg.dim), 2, 2, true);
        return check_with_shrink(
            [](const EElement& x) { return connes_B_extended(connes_B_extended(x)).is_zero(); },
            std::pair<const char*, EElement>{"e", e});
    });

    add("b_B_anticommute", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/b_B_anticommute", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(1, 2), g.uniform(0, cfg.dim), 2, 2, true);
        return check_with_shrink(
            [](const EElement& x) {
                return (extended_b(connes_B_extended(x)) + connes_B_extended(extended_b(x))).is_zero();
            },
            std::pair<const char*, EElement>{"e", e});
    });

    add("cyclic_differential_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/cyclic_differential_squares", trial);
        Gen g(rng, cfg);
        EElement e0 = g.eelement(g.uniform(1, 2), g.uniform(0, cfg.dim), 2, 2, true);
        UEElement e = UEElement::embed(cfg.ucap, e0);
        auto cyc = [](const UEElement& x) {
            return x.map([](const EElement& y) { return extended_b(y); }) +
                   x.map([](const EElement& y) { return connes_B_extended(y); }).shifted_up(1);
        };
        return check_with_shrink(
            [&](const UEElement& x) { return cyc(cyc(x)).is_zero(); },
            std::pair<const char*, UEElement>{"e", e});
    });

    add("nabla_leibniz", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/nabla_leibniz", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(0, 2), 0, 2, 1, false);
        LaurentPoly f = g.poly(2);
        // scale every coefficient by f
        auto scale_e = [](const EElement& x, const LaurentPoly& p) {
            EElement out(x.dim());
            for (const auto& [k, c] : x.terms()) out.add_term(k, c * p);
            return out;
        };
        // df wedged into the form factor, with the connection sign
        auto df_wedge = [](const EElement& x, const LaurentPoly& p) {
            EElement out(x.dim());
            for (const auto& [k, c] : x.terms()) {
                int sgn = k.slots.size() % 2 ? -1 : 1;
                for (int a = 1; a <= x.dim(); ++a) {
                    Mask bit = Mask(1) << (a - 1);
                    if (k.form_mask & bit) continue;
                    LaurentPoly dp = p.partial(a);
                    if (dp.is_zero()) continue;
                    EKey t;
                    t.form_mask = k.form_mask | bit;
                    t.slots = k.slots;
                    out.add_term(t, (c * dp).scaled(Rational(sgn * mask_merge_sign(bit, k.form_mask))));
                }
            }
            return out;
        };
        return check_with_shrink(
            [&](const EElement& x) {
                return extended_nabla(scale_e(x, f)) == scale_e(extended_nabla(x), f) + df_wedge(x, f);
            },
            std::pair<const char*, EElement>{"e", e});
    });

    add("embed_is_chain_map", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/embed_is_chain_map", trial);
        Gen g(rng, cfg);
        MultiDiffOp phi = g.cochain_top(g.uniform(0, cfg.arity_cap));
        return check_with_shrink(
            [](const MultiDiffOp& p) {
                return extended_b(embed_cochain(p)) == embed_cochain(cochain_differential_valued(p));
            },
            std::pair<const char*, MultiDiffOp>{"phi", phi});
    });

    add("embed_is_injective", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/embed_is_injective", trial);
        Gen g(rng, cfg);
        int arity = g.uniform(0, cfg.arity_cap);
        MultiDiffOp a = g.cochain_top(arity), b = g.cochain_top(arity);
        TrialOutcome out;
        if ((a == b) != (embed_cochain(a) == embed_cochain(b))) {
            out.pass = false;
            out.counterexample = "phi1 = " + a.str() + "; phi2 = " + b.str();
        }
        return out;
    });

    add("embed_image_shape", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/embed_image_shape", trial);
        Gen g(rng, cfg);
        MultiDiffOp phi = g.cochain_top(g.uniform(0, cfg.arity_cap));
        EElement e = embed_cochain(phi);
        Mask full = (Mask(1) << cfg.dim) - 1u;
        TrialOutcome out;
        for (const auto& [k, c] : e.terms()) {
            if (k.form_mask != full || !midx_is_zero(k.slots[0])) {
                out.pass = false;
                out.counterexample = "term outside the characterized image for phi = " + phi.str();
                break;
            }
        }
        if (out.pass && !e.is_normalized()) {
            out.pass = false;
            out.counterexample = "image not normalized for phi = " + phi.str();
        }
        return out;
    });

    add("hkr_vt_is_cocycle", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/hkr_vt_is_cocycle", trial);
        Gen g(rng, cfg);
        MultiVector mv = g.multivector(g.uniform(0, cfg.dim));
        for (const auto& vol : cfg.volumes()) {
            auto out = check_with_shrink(
                [&vol](const MultiVector& x) {
                    return cochain_differential_valued(hkr_vt(VTop(x, vol))).is_zero();
                },
                std::pair<const char*, MultiVector>{"nu", mv});
            if (!out.pass) {
                out.counterexample += "; volume = " + vol.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("duality_with_chain_boundary", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/duality_with_chain_boundary", trial);
        Gen g(rng, cfg);
        ChainOp lam = g.chainop(g.uniform(0, 2));
        VolumeForm vol = cfg.volumes()[trial % cfg.volumes().size()];
        return check_with_shrink(
            [&vol](const ChainOp& l) {
                return extended_b(chainop_to_eelement(l, vol)) ==
                       chainop_to_eelement(precompose_boundary(l), vol);
            },
            std::pair<const char*, ChainOp>{"lambda", lam});
    });

    add("duality_with_connes_B", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/duality_with_connes_B", trial);
        Gen g(rng, cfg);
        ChainOp lam = g.chainop(g.uniform(1, 2));
        VolumeForm vol = cfg.volumes()[trial % cfg.volumes().size()];
        return check_with_shrink(
            [&vol](const ChainOp& l) {
                return connes_B_extended(chainop_to_eelement(l, vol)) ==
                       chainop_to_eelement(precompose_connes_B(l), vol);
            },
            std::pair<const char*, ChainOp>{"lambda", lam});
    });

    add("precompose_action_matches_evaluation", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/precompose_action_matches_evaluation", trial);
        Gen g(rng, cfg);
        ChainOp lam = g.chainop(g.uniform(0, 2));
        MultiDiffOp d = g.cochain(g.uniform(1, 2), 2, 1);
        ChainOp comp = precompose_action(lam, d);
        // compare extensionally on chains of every length the composite supports
        for (int len = 0; len <= 3; ++len) {
            HochChain c = g.chain(len, 1);
            if (!(comp.apply(c) == lam.apply(cochain_action(d, c)))) {
                TrialOutcome out;
                out.pass = false;
                out.counterexample = "lambda = " + lam.str() + "; D = " + d.str() + "; c = " + c.str();
                return out;
            }
        }
        return TrialOutcome{};
    });

    add("projection_kills_exact", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/projection_kills_exact", trial);
        Gen g(rng, cfg);
        EElement pre = g.eelement(g.uniform(0, 2), cfg.dim - 1, 1, 1, false);
        return check_with_shrink(
            [&](const EElement& x) {
                EElement img = extended_nabla(x);
                return project_top_mod_exact(img, cfg.win_lo - 2, cfg.win_hi + 2, 3).is_zero();
            },
            std::pair<const char*, EElement>{"preimage", pre});
    });

    add("projection_keeps_top_classes", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "extended/projection_keeps_top_classes", trial);
        Gen g(rng, cfg);
        MultiVector mv = g.multivector(g.uniform(0, cfg.dim), 1);
        VolumeForm vol = VolumeForm::standard(cfg.dim);
        EElement e = embed_cochain(hkr_vt(VTop(mv, vol)));
        TrialOutcome out;
        if (e.is_zero()) return out;
        if (project_top_mod_exact(e, cfg.win_lo - 2, cfg.win_hi + 2, 3).is_zero()) {
            out.pass = false;
            out.counterexample = "top class killed for nu = " + mv.str();
        }
        return out;
    });

    add("b_sign_flip_breaks_square", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "control/extended_b_sign_flip", trial);
        Gen g(rng, cfg);
        EElement e = g.eelement(g.uniform(0, 2), g.uniform(0, cfg.dim), 2, 2, false);
        // ordinary property check; the planted wrap sign must break it
        TrialOutcome out;
        if (!extended_b_wrong_wrap(extended_b_wrong_wrap(e)).is_zero()) {
            out.pass = false;
            out.counterexample = "square nonzero on e = " + e.str();
        }
        return out;
    }, 0, true);
}

void register_koszul_suite() {
    Identity d0sq;
    d0sq.id = "koszul/d0_squares";
    d0sq.group = "koszul";
    d0sq.run = [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "koszul/d0_squares", trial);
        Gen g(rng, cfg);
        SymbolElement s(cfg.dim);
        int terms = g.uniform(1, 3);
        for (int i = 0; i < terms; ++i) {
            SymbolElement::Key k;
            int p = g.uniform(0, cfg.dim);
            std::vector<int> axes = g.permutation(cfg.dim);
            for (int a = 0; a < p; ++a) k.wedge |= Mask(1) << axes[static_cast<size_t>(a)];
            k.sym = midx_zero(cfg.dim);
            int q = g.uniform(0, 3);
            for (int o = 0; o < q; ++o) k.sym[static_cast<size_t>(g.uniform(0, cfg.dim - 1))] += 1;
            s.add_term(k, g.coefficient());
        }
        return check_with_shrink(
            [](const SymbolElement& x) { return koszul_symbol_d0(koszul_symbol_d0(x)).is_zero(); },
            std::pair<const char*, SymbolElement>{"s", s});
    };
    SuiteRegistry::instance().add("koszul", d0sq);

    Identity conc;
    conc.id = "koszul/line_cohomology_concentration";
    conc.group = "koszul";
    conc.trials_override = 1;
    conc.run = [](const SuiteConfig&, uint64_t) {
        TrialOutcome out;
        for (int d = 1; d <= 3; ++d) {
            for (int c = -d; c <= 2; ++c) {
                auto dims = koszul_line_cohomology(d, c, d + c + 4);
                int p_min = std::max(0, -c);
                for (size_t i = 0; i < dims.size(); ++i) {
                    int p = p_min + static_cast<int>(i);
                    int q = p + c;
                    int expected = (p == d && q == 0) ? 1 : 0;
                    if (dims[i] != expected) {
                        out.pass = false;
                        out.counterexample = "d=" + std::to_string(d) + " c=" + std::to_string(c) +
                                             " p=" + std::to_string(p) +
                                             " dim=" + std::to_string(dims[i]) +
                                             " expected=" + std::to_string(expected);
                        return out;
                    }
                }
            }
        }
        return out;
    };
    SuiteRegistry::instance().add("koszul", conc);

    Identity spot;
    spot.id = "koszul/d2_line0_spot_values";
    spot.group = "koszul";
    spot.trials_override = 1;
    spot.run = [](const SuiteConfig&, uint64_t) {
        TrialOutcome out;
        auto b0 = symbol_basis(2, 0, 0), b1 = symbol_basis(2, 1, 1), b2 = symbol_basis(2, 2, 2);
        if (b0.size() != 1 || b1.size() != 4 || b2.size() != 3) {
            out.pass = false;
            out.counterexample = "dims along the d=2, c=0 line are (" + std::to_string(b0.size()) +
                                 "," + std::to_string(b1.size()) + "," + std::to_string(b2.size()) +
                                 "), expected (1,4,3)";
            return out;
        }
        auto rank_between = [](const std::vector<SymbolElement::Key>& src,
                               const std::vector<SymbolElement::Key>& dst) {
            std::map<SymbolElement::Key, size_t> index;
            for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
            RationalMatrix m(dst.size(), src.size());
            for (size_t j = 0; j < src.size(); ++j) {
                SymbolElement e(2);
                e.add_term(src[j], Rational(1));
                SymbolElement img = koszul_symbol_d0(e);
                for (const auto& [k, v] : img.terms()) {
                    auto it = index.find(k);
                    if (it != index.end()) m.at(it->second, j) = v;
                }
            }
            return m.rank();
        };
        size_t r0 = rank_between(b0, b1), r1 = rank_between(b1, b2);
        if (r0 != 1 || r1 != 3) {
            out.pass = false;
            out.counterexample = "ranks along the d=2, c=0 line are (" + std::to_string(r0) + "," +
                                 std::to_string(r1) + "), expected (1,3)";
        }
        return out;
    };
    SuiteRegistry::instance().add("koszul", spot);
}

} // namespace cychains
