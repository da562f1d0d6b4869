#include "cychains/generators.hpp"
#include "cychains/uactions.hpp"

#include <doctest.h>

using namespace cychains;

namespace {

LaurentPoly one2() { return LaurentPoly::constant(2, Rational(1)); }
MultiVector d1() { return MultiVector::basis(2, 0x1, one2()); }

UMultiVector at_upower(const MultiVector& m, int j, int cap = 4) {
    return UMultiVector::embed(cap, m, j);
}

} // namespace

TEST_CASE("u-scaling of multivector series") {
    UMultiVector g = UMultiVector::zero(3);
    g.coeff(0) = d1();
    g.coeff(1) = MultiVector::basis(2, 0x2, one2());
    CHECK(scale_u(Rational(0), g) == UMultiVector::embed(3, d1()));
    CHECK(scale_u(Rational(1), g) == g);
    UMultiVector doubled = g;
    doubled.coeff(1) = doubled.coeff(1).scaled(Rational(2));
    CHECK(scale_u(Rational(2), g) == doubled);
}

TEST_CASE("scaled insertion specializations") {
    UMultiVector g = UMultiVector::zero(3);
    g.coeff(0) = d1();
    g.coeff(1) = MultiVector::basis(2, 0x2, one2());
    UDiffForm a = UDiffForm::embed(3, DiffForm::basis(2, 0x3, one2()));
    CHECK(iota_t(Rational(1), g, a) == contract_u(g, a));
    CHECK(iota_t(Rational(0), g, a) == contract_u(d1(), a));
    UDiffForm two = contract_u(d1(), a) +
                    contract_u(MultiVector::basis(2, 0x2, one2()), a).scaled(Rational(2)).shifted_up(1);
    CHECK(iota_t(Rational(2), g, a) == two);
}

TEST_CASE("interpolated action at the distinguished parameters") {
    VolumeForm vol = VolumeForm::standard(2);
    // gamma = d1, alpha = t1 dt2: the action gives (1 - t) dt2
    UMultiVector g = at_upower(d1(), 0);
    UDiffForm a = UDiffForm::embed(4, DiffForm::basis(2, 0x2, LaurentPoly::variable(2, 1)));
    UDiffForm dt2 = UDiffForm::embed(4, DiffForm::basis(2, 0x2, one2()));
    CHECK(action_Lt(vol, Rational(0), g, a) == dt2);
    CHECK(action_Lt(vol, Rational(1), g, a).is_zero());
    CHECK(action_Lt(vol, Rational(2), g, a) == -dt2);
    // t = 0 reduces to the plain Lie derivative of the zeroth coefficient
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 20; ++trial) {
        auto rng = make_rng(17, "test/action_t0", trial);
        Gen gen(rng, cfg);
        UMultiVector x = gen.umultivector(gen.umv_degree());
        UDiffForm al = gen.udiffform(gen.uform_degree());
        const MultiVector x0 = x.coeff(0);
        UDiffForm expected = al.map([&](const DiffForm& f) { return lie_derivative(x0, f); });
        CHECK(action_Lt(vol, Rational(0), x, al) == expected);
    }
}

TEST_CASE("dual action specializations") {
    VolumeForm vol = VolumeForm::standard(2);
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 20; ++trial) {
        auto rng = make_rng(17, "test/dual_action", trial);
        Gen gen(rng, cfg);
        int gr = gen.uniform(0, 2), nr = gen.uniform(0, 2);
        MultiVector gp = gen.multivector(gr), nu = gen.multivector(nr);
        UMultiVector g = at_upower(gp, 0);
        UVTop x = UVTop::embed(cfg.ucap, VTop(nu, vol));
        // t = 1: the bracket alone
        UVTop t1 = action_Lt_dual(vol, Rational(1), g, x);
        CHECK(t1 == UVTop::embed(cfg.ucap, VTop(schouten(gp, nu), vol)));
        // t = 0: bracket plus the full divergence correction
        UVTop t0 = action_Lt_dual(vol, Rational(0), g, x);
        MultiVector corr = wedge(divergence(vol, gp), nu).scaled(Rational((gr - 1) % 2 == 0 ? 1 : -1));
        CHECK(t0 == UVTop::embed(cfg.ucap, VTop(schouten(gp, nu) + corr, vol)));
    }
    // constants act trivially; a nonconstant function acts through its bracket
    UMultiVector c5 = at_upower(MultiVector::from_poly(LaurentPoly::constant(2, Rational(5))), 0);
    UVTop x = UVTop::embed(4, VTop(d1(), vol));
    CHECK(action_Lt_dual(vol, Rational(1, 2), c5, x).is_zero());
    UMultiVector f = at_upower(MultiVector::from_poly(LaurentPoly::variable(2, 1)), 0);
    UVTop fx = action_Lt_dual(vol, Rational(1, 2), f, x);
    CHECK(fx == UVTop::embed(4, VTop(schouten(MultiVector::from_poly(LaurentPoly::variable(2, 1)), d1()),
                                     vol)));
}

TEST_CASE("dual differential on generators") {
    VolumeForm vol = VolumeForm::standard(2);
    MultiVector t1d1 = MultiVector::basis(2, 0x1, LaurentPoly::variable(2, 1));
    CHECK(dual_differential(UVTop::embed(4, VTop(t1d1, vol))).is_zero());
    UVTop img = dual_differential(UVTop::embed(4, VTop(d1(), vol)));
    UVTop expected = UVTop::embed(
        4, VTop(MultiVector::from_poly(LaurentPoly::monomial(2, {-1, 0}, Rational(-1))), vol), 1);
    CHECK(img == expected);
    CHECK(dual_differential(UVTop::embed(4, VTop(MultiVector::from_poly(one2()), vol))).is_zero());
}

TEST_CASE("homotopy operator closed form") {
    UDiffForm a = UDiffForm::embed(4, DiffForm::basis(2, 0x3, one2()));
    CHECK(h_t(Rational(1), at_upower(d1(), 0), a).is_zero());
    UDiffForm h1 = h_t(Rational(5), at_upower(d1(), 1), a);
    CHECK(h1 == -contract_u(d1(), a).truncated(3));
    UDiffForm h2 = h_t(Rational(1), at_upower(d1(), 2), a);
    CHECK(h2 == contract_u(d1(), a).scaled(Rational(-2)).shifted_up(1).truncated(3));
}

TEST_CASE("exponential morphism coefficients") {
    UDiffForm a = UDiffForm::embed(4, DiffForm::basis(2, 0x3, one2()));
    CHECK(H1_taylor(+1, {}, a) == a);
    std::vector<UMultiVector> one_arg{at_upower(d1(), 1)};
    // |u gamma| is even, so the sign channel appears directly
    CHECK(H1_taylor(+1, one_arg, a) == contract_u(d1(), a).truncated(3));
    CHECK(H1_taylor(-1, one_arg, a) == -contract_u(d1(), a).truncated(3));
    std::vector<UMultiVector> two_args{at_upower(d1(), 1),
                                       at_upower(MultiVector::basis(2, 0x2, one2()), 1)};
    UDiffForm expected = contract_u(d1(), contract_u(MultiVector::basis(2, 0x2, one2()), a)).truncated(2);
    CHECK(H1_taylor(+1, two_args, a) == expected);
    CHECK(H1_taylor(-1, two_args, a) == expected); // sign squared
}
