#include "cychains/hochschild.hpp"

#include "suites_common.hpp"

namespace cychains {

namespace {

void add(const std::string& id, std::function<TrialOutcome(const SuiteConfig&, uint64_t)> run,
         int trials_override = 0) {
    Identity ident;
    ident.id = "hochschild/" + id;
    ident.group = "hochschild";
    ident.run = std::move(run);
    ident.trials_override = trials_override;
    SuiteRegistry::instance().add("hochschild", ident);
}

bool chain_representation_ok(const HochChain& c) {
    for (const auto& [k, coef] : c.terms()) {
        if (coef.is_zero()) return false;
        for (size_t j = 1; j < k.size(); ++j) {
            bool zero = true;
            for (int x : k[j])
                if (x) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

void register_hochschild_suite() {
    add("cochain_differential_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/cochain_differential_squares", trial);
        Gen g(rng, cfg);
        MultiDiffOp phi = g.cochain(g.uniform(0, cfg.arity_cap));
        return check_with_shrink(
            [](const MultiDiffOp& p) { return cochain_differential(cochain_differential(p)).is_zero(); },
            std::pair<const char*, MultiDiffOp>{"phi", phi});
    });

    add("cochain_differential_preserves_normalized", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/cochain_differential_preserves_normalized", trial);
        Gen g(rng, cfg);
        MultiDiffOp phi = g.cochain(g.uniform(1, cfg.arity_cap));
        return check_with_shrink(
            [](const MultiDiffOp& p) { return cochain_differential(p).is_normalized(); },
            std::pair<const char*, MultiDiffOp>{"phi", phi});
    });

    add("gerstenhaber_antisymmetry", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/gerstenhaber_antisymmetry", trial);
        Gen g(rng, cfg);
        MultiDiffOp a = g.cochain(g.uniform(0, cfg.arity_cap));
        MultiDiffOp b = g.cochain(g.uniform(0, cfg.arity_cap));
        int sgn = sign_of(a.degree() * b.degree());
        return check_with_shrink(
            [sgn](const MultiDiffOp& x, const MultiDiffOp& y) {
                return (gerstenhaber(x, y) + gerstenhaber(y, x).scaled(Rational(sgn))).is_zero();
            },
            std::pair<const char*, MultiDiffOp>{"phi", a}, std::pair<const char*, MultiDiffOp>{"psi", b});
    });

    add("gerstenhaber_jacobi", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/gerstenhaber_jacobi", trial);
        Gen g(rng, cfg);
        MultiDiffOp a = g.cochain(g.uniform(0, std::min(3, cfg.arity_cap)), 2, 2);
        MultiDiffOp b = g.cochain(g.uniform(0, std::min(3, cfg.arity_cap)), 2, 2);
        MultiDiffOp c = g.cochain(g.uniform(0, std::min(3, cfg.arity_cap)), 2, 2);
        int sgn = sign_of(a.degree() * b.degree());
        return check_with_shrink(
            [sgn](const MultiDiffOp& x, const MultiDiffOp& y, const MultiDiffOp& z) {
                MultiDiffOp lhs = gerstenhaber(x, gerstenhaber(y, z));
                MultiDiffOp rhs = gerstenhaber(gerstenhaber(x, y), z) +
                                  gerstenhaber(y, gerstenhaber(x, z)).scaled(Rational(sgn));
                return lhs == rhs;
            },
            std::pair<const char*, MultiDiffOp>{"phi", a}, std::pair<const char*, MultiDiffOp>{"psi", b},
            std::pair<const char*, MultiDiffOp>{"chi", c});
    });

    add("chain_boundary_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/chain_boundary_squares", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(0, 4));
        return check_with_shrink(
            [](const HochChain& x) { return chain_boundary(chain_boundary(x)).is_zero(); },
            std::pair<const char*, HochChain>{"c", c});
    });

    add("connes_B_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/connes_B_squares", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(0, 3));
        return check_with_shrink(
            [](const HochChain& x) { return connes_B(connes_B(x)).is_zero(); },
            std::pair<const char*, HochChain>{"c", c});
    });

    add("boundary_B_anticommute", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/boundary_B_anticommute", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(0, 3));
        return check_with_shrink(
            [](const HochChain& x) {
                return (chain_boundary(connes_B(x)) + connes_B(chain_boundary(x))).is_zero();
            },
            std::pair<const char*, HochChain>{"c", c});
    });

    add("negative_cyclic_differential_squares", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/negative_cyclic_differential_squares", trial);
        Gen g(rng, cfg);
        UHochChain c = g.uchain(-g.uniform(0, 3));
        auto cyclic_d = [](const UHochChain& x) {
            return x.map([](const HochChain& y) { return chain_boundary(y); }) +
                   x.map([](const HochChain& y) { return connes_B(y); }).shifted_up(1);
        };
        return check_with_shrink(
            [&](const UHochChain& x) { return cyclic_d(cyclic_d(x)).is_zero(); },
            std::pair<const char*, UHochChain>{"c", c});
    });

    add("action_of_multiplication_is_boundary", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/action_of_multiplication_is_boundary", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(0, 3));
        MultiDiffOp m0 = MultiDiffOp::multiplication(cfg.dim);
        return check_with_shrink(
            [&](const HochChain& x) { return cochain_action(m0, x) == chain_boundary(x); },
            std::pair<const char*, HochChain>{"c", c});
    });

    add("action_graded_commutes_with_B", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/action_graded_commutes_with_B", trial);
        Gen g(rng, cfg);
        MultiDiffOp d = g.cochain(g.uniform(1, std::min(3, cfg.arity_cap)));
        HochChain c = g.chain(g.uniform(0, 3));
        int sgn = sign_of(d.degree());
        return check_with_shrink(
            [&, sgn](const MultiDiffOp& dd, const HochChain& x) {
                HochChain lhs = connes_B(cochain_action(dd, x));
                HochChain rhs = cochain_action(dd, connes_B(x)).scaled(Rational(sgn));
                return lhs == rhs;
            },
            std::pair<const char*, MultiDiffOp>{"D", d}, std::pair<const char*, HochChain>{"c", c});
    });

    add("action_respects_bracket", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/action_respects_bracket", trial);
        Gen g(rng, cfg);
        MultiDiffOp d1 = g.cochain(g.uniform(1, std::min(3, cfg.arity_cap)), 2, 2);
        MultiDiffOp d2 = g.cochain(g.uniform(1, std::min(3, cfg.arity_cap)), 2, 2);
        HochChain c = g.chain(g.uniform(0, 3));
        int sgn = sign_of(d1.degree() * d2.degree());
        return check_with_shrink(
            [sgn](const MultiDiffOp& x, const MultiDiffOp& y, const HochChain& cc) {
                HochChain lhs = cochain_action(gerstenhaber(x, y), cc);
                HochChain rhs = cochain_action(x, cochain_action(y, cc)) -
                                cochain_action(y, cochain_action(x, cc)).scaled(Rational(sgn));
                return lhs == rhs;
            },
            std::pair<const char*, MultiDiffOp>{"D1", d1}, std::pair<const char*, MultiDiffOp>{"D2", d2},
            std::pair<const char*, HochChain>{"c", c});
    });

    add("action_respects_differential", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/action_respects_differential", trial);
        Gen g(rng, cfg);
        MultiDiffOp d = g.cochain(g.uniform(1, std::min(3, cfg.arity_cap)), 2, 2);
        HochChain c = g.chain(g.uniform(0, 3));
        int sgn = sign_of(d.degree());
        return check_with_shrink(
            [sgn](const MultiDiffOp& x, const HochChain& cc) {
                HochChain lhs = cochain_action(cochain_differential(x), cc);
                HochChain rhs = chain_boundary(cochain_action(x, cc)) -
                                cochain_action(x, chain_boundary(cc)).scaled(Rational(sgn));
                return lhs == rhs;
            },
            std::pair<const char*, MultiDiffOp>{"D", d}, std::pair<const char*, HochChain>{"c", c});
    });

    add("hkr_kills_boundary", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/hkr_kills_boundary", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(1, 3));
        return check_with_shrink(
            [](const HochChain& x) { return hkr_chains(chain_boundary(x)).is_zero(); },
            std::pair<const char*, HochChain>{"c", c});
    });

    add("hkr_intertwines_B_with_d", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/hkr_intertwines_B_with_d", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(0, 3));
        return check_with_shrink(
            [](const HochChain& x) { return hkr_chains(connes_B(x)) == de_rham(hkr_chains(x)); },
            std::pair<const char*, HochChain>{"c", c});
    });

    add("operations_preserve_normal_form", [](const SuiteConfig& cfg, uint64_t trial) {
        auto rng = make_rng(cfg.seed, "hochschild/operations_preserve_normal_form", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(0, 3));
        MultiDiffOp d = g.cochain(g.uniform(1, std::min(3, cfg.arity_cap)));
        TrialOutcome out;
        if (!chain_representation_ok(chain_boundary(c)) || !chain_representation_ok(connes_B(c)) ||
            !chain_representation_ok(cochain_action(d, c))) {
            out.pass = false;
            out.counterexample = "normal form violated for c = " + c.str() + ", D = " + d.str();
        }
        return out;
    });
}

} // namespace cychains
