#include "cychains/generators.hpp"
#include "cychains/linfty.hpp"

#include <doctest.h>

using namespace cychains;

namespace {

LaurentPoly one2() { return LaurentPoly::constant(2, Rational(1)); }

} // namespace

TEST_CASE("dgla conversion produces the displayed coefficients") {
    VolumeForm vol = VolumeForm::standard(2);
    AlgebraFamily<UMultiVector> q = schouten_algebra_family(vol);
    // Q_1 is u div
    UMultiVector x = UMultiVector::embed(4, MultiVector::basis(2, 0x1, one2()));
    Graded<UMultiVector> gx{x, 0};
    UMultiVector img = q.apply(1, std::vector<Graded<UMultiVector>>{gx}).value;
    UMultiVector expected = UMultiVector::embed(
        4, MultiVector::from_poly(LaurentPoly::monomial(2, {-1, 0}, Rational(-1))), 1);
    CHECK(img == expected);
    // Q_2 on an odd first argument is plus the bracket
    MultiVector f = MultiVector::from_poly(LaurentPoly::variable(2, 1));
    Graded<UMultiVector> gf{UMultiVector::embed(4, f), -1};
    UMultiVector q2 = q.apply(2, std::vector<Graded<UMultiVector>>{gf, gx}).value;
    CHECK(q2 == UMultiVector::embed(4, schouten(f, MultiVector::basis(2, 0x1, one2()))));
    // an absent coefficient evaluates to zero
    CHECK(q.apply(3, std::vector<Graded<UMultiVector>>{gx, gx, gx}).value.is_zero());
}

TEST_CASE("conversion of the zero structures gives zero families") {
    auto q = dgla_to_linfty<UMultiVector>(
        [](const Graded<UMultiVector>&) { return UMultiVector(); },
        [](const Graded<UMultiVector>&, const Graded<UMultiVector>&) { return UMultiVector(); });
    SuiteConfig cfg;
    auto rng = make_rng(19, "test/zero_family", 0);
    Gen g(rng, cfg);
    std::vector<Graded<UMultiVector>> xs;
    for (int i = 0; i < 3; ++i) {
        int deg = g.umv_degree();
        xs.push_back(Graded<UMultiVector>{g.umultivector(deg), deg});
    }
    for (size_t n = 1; n <= 3; ++n) {
        std::span<const Graded<UMultiVector>> sp(xs.data(), n);
        CHECK(q.apply(n, sp).value.is_zero());
        CHECK(coderivation_square_residual(q, sp).is_zero());
    }
}

TEST_CASE("module conversion carries the differential in arity zero") {
    ModuleFamily<MultiDiffOp, UHochChain> qt = chains_module_over_cochains();
    SuiteConfig cfg;
    auto rng = make_rng(19, "test/chains_q0", 0);
    Gen g(rng, cfg);
    HochChain c = g.chain(2);
    Graded<UHochChain> m{UHochChain::embed(cfg.ucap, c), -2};
    UHochChain img = qt.apply(0, {}, m).value;
    UHochChain expected = UHochChain::embed(cfg.ucap, chain_boundary(c)) +
                          UHochChain::embed(cfg.ucap, connes_B(c), 1);
    CHECK(img == expected);
}

TEST_CASE("square residual flags a non-Lie bracket") {
    VolumeForm vol = VolumeForm::standard(2);
    AlgebraFamily<UMultiVector> q = wedge_nonjacobi_family(vol);
    SuiteConfig cfg;
    bool found = false;
    for (uint64_t trial = 0; trial < 20 && !found; ++trial) {
        auto rng = make_rng(19, "test/nonjacobi", trial);
        Gen g(rng, cfg);
        std::vector<Graded<UMultiVector>> xs;
        for (int i = 0; i < 3; ++i) {
            int deg = g.umv_degree();
            xs.push_back(Graded<UMultiVector>{g.umultivector(deg), deg});
        }
        for (size_t n = 2; n <= 3; ++n) {
            std::span<const Graded<UMultiVector>> sp(xs.data(), n);
            if (!coderivation_square_residual(q, sp).is_zero()) found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("adjoint action module inherits vanishing residuals") {
    VolumeForm vol = VolumeForm::standard(2);
    AlgebraFamily<UMultiVector> q = schouten_algebra_family(vol);
    ModuleFamily<UMultiVector, UMultiVector> qt = adjoint_action_module(q, 2);
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 10; ++trial) {
        auto rng = make_rng(19, "test/adjoint_action", trial);
        Gen g(rng, cfg);
        std::vector<Graded<UMultiVector>> xs;
        for (int i = 0; i < 2; ++i) {
            int deg = g.umv_degree();
            xs.push_back(Graded<UMultiVector>{g.umultivector(deg), deg});
        }
        int mdeg = g.umv_degree();
        Graded<UMultiVector> m{g.umultivector(mdeg), mdeg};
        std::span<const Graded<UMultiVector>> sp(xs.data(), xs.size());
        CHECK(module_axiom_residual(q, qt, sp, m).is_zero());
    }
}

TEST_CASE("target coderivation on dualized operators matches the extended differentials") {
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 10; ++trial) {
        auto rng = make_rng(19, "test/oh_target", trial);
        Gen g(rng, cfg);
        VolumeForm vol = cfg.volumes()[trial % cfg.volumes().size()];
        ChainOp lam = g.chainop(g.uniform(1, 2));
        int lam_deg = g.uniform(0, 3);
        EElement e = chainop_to_eelement(lam, vol);
        int front = (lam_deg % 2 == 0) ? -1 : 1; // -(-1)^{|lambda|}
        USeries<EElement> expected =
            USeries<EElement>::embed(cfg.ucap, extended_b(e).scaled(Rational(front))) +
            USeries<EElement>::embed(cfg.ucap, connes_B_extended(e).scaled(Rational(front)), 1) +
            USeries<EElement>::embed(cfg.ucap, extended_nabla(e));
        CHECK(oh_target_coefficient(0, {}, lam, lam_deg, vol, cfg.ucap) == expected);
    }
}

TEST_CASE("toy dualization pairs chains against multivectors") {
    // lambda(a_0) = a_0 gamma and lambda(a_0 (x) a_1) contracts da_1 into gamma
    MultiVector gamma = MultiVector::basis(2, 0x3, one2());
    ChainOp lam = toy_chain_to_vector(gamma);
    HochChain c0 = HochChain::elementary(2, {LaurentPoly::variable(2, 1)});
    CHECK(lam.apply(c0) == gamma.scaled_poly(LaurentPoly::variable(2, 1)));
    HochChain c1 = HochChain::elementary(2, {LaurentPoly::constant(2, Rational(1)),
                                             LaurentPoly::variable(2, 1)});
    MultiVector expected = contract_form_into_mv(
        de_rham(DiffForm::from_poly(LaurentPoly::variable(2, 1))), gamma);
    CHECK(lam.apply(c1) == expected);
    // chains longer than the wedge rank die
    HochChain c3 = HochChain::elementary(
        2, {one2(), LaurentPoly::variable(2, 1), LaurentPoly::variable(2, 2),
            LaurentPoly::monomial(2, {1, 1}, Rational(1))});
    CHECK(lam.apply(c3).is_zero());
}

TEST_CASE("reinterpreted coefficient consumes the shifted slot") {
    VolumeForm vol = VolumeForm::standard(2);
    ChainMorphism v;
    v.coeffs.resize(2);
    v.coeffs[1] = [](std::span<const Graded<UMultiVector>> xs) {
        const UMultiVector& x = xs[0].value;
        if (x.ucap() < 1) return ChainOp();
        return toy_chain_to_vector(x.coeff(1));
    };
    Reinterpreted w = reinterpret_chain_morphism(std::move(v), vol);
    MultiVector gamma = MultiVector::basis(2, 0x1, one2());
    EElement coeff = w.coefficient({}, gamma, 4);
    CHECK(coeff == chainop_to_eelement(toy_chain_to_vector(gamma), vol));
    // zero morphism gives zero coefficients
    Reinterpreted z = reinterpret_chain_morphism(ChainMorphism{}, vol);
    CHECK(z.coefficient({}, gamma, 4).is_zero());
}
