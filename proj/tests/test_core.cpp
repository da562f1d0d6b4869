#include "cychains/generators.hpp"
#include "cychains/grading.hpp"
#include "cychains/laurent.hpp"
#include "cychains/useries.hpp"

#include <doctest.h>

using namespace cychains;

namespace {

LaurentPoly mono(int dim, std::initializer_list<int> exps, long num, long den = 1) {
    return LaurentPoly::monomial(dim, ExpVec(exps), Rational(num, den));
}

} // namespace

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((a + Rational(1, 2)).is_one());
    CHECK((Rational(3) / Rational(-6)) == Rational(-1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("laurent products of inverse monomials collapse") {
    LaurentPoly t1 = LaurentPoly::variable(2, 1);
    LaurentPoly t1_inv = mono(2, {-1, 0}, 1);
    CHECK(t1 * t1_inv == LaurentPoly::constant(2, Rational(1)));
    CHECK((t1 * LaurentPoly::zero(2)).is_zero());
}

TEST_CASE("laurent difference of squares") {
    LaurentPoly t1 = LaurentPoly::variable(2, 1);
    LaurentPoly t2 = LaurentPoly::variable(2, 2);
    LaurentPoly expected = mono(2, {2, 0}, 1) - mono(2, {0, 2}, 1);
    CHECK((t1 + t2) * (t1 - t2) == expected);
}

TEST_CASE("partial derivatives, power rule with negative exponents") {
    CHECK(mono(2, {3, 0}, 1).partial(1) == mono(2, {2, 0}, 3));
    CHECK(LaurentPoly::variable(2, 2).partial(1).is_zero());
    CHECK(mono(2, {-1, 1}, 1).partial(1) == mono(2, {-2, 1}, -1));
    CHECK_THROWS_AS(mono(2, {1, 0}, 1).partial(3), std::invalid_argument);
}

TEST_CASE("ring axioms on randomized triples") {
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 30; ++trial) {
        auto rng = make_rng(7, "test/ring_axioms", trial);
        Gen g(rng, cfg);
        LaurentPoly a = g.poly(), b = g.poly(), c = g.poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("mixed partials commute") {
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 30; ++trial) {
        auto rng = make_rng(7, "test/partials_commute", trial);
        Gen g(rng, cfg);
        LaurentPoly a = g.poly();
        CHECK(a.partial(1).partial(2) == a.partial(2).partial(1));
    }
}

TEST_CASE("koszul sign basics") {
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
    // cyclic shift of three odd elements composes two adjacent swaps
    CHECK(koszul_sign({1, 2, 0}, {1, 1, 1}) == 1);
    CHECK(koszul_sign({1, 0}, {2, 1}) == 1);
    CHECK_THROWS_AS(koszul_sign({0, 1}, {1}), std::invalid_argument);
}

TEST_CASE("koszul sign composes through the permuted degree list") {
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 50; ++trial) {
        auto rng = make_rng(7, "test/koszul_compose", trial);
        Gen g(rng, cfg);
        int n = g.uniform(2, 5);
        std::vector<int> p = g.permutation(n), q = g.permutation(n);
        std::vector<int> degs(static_cast<size_t>(n));
        for (auto& d : degs) d = g.uniform(-2, 3);
        int lhs = koszul_sign(perm_compose(p, q), degs);
        int rhs = koszul_sign(p, degs) * koszul_sign(q, permute_degrees(p, degs));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("u-series division shifts coefficients down") {
    USeries<LaurentPoly> s(3);
    s.coeff(1) = mono(2, {1, 0}, 1);
    CHECK(s.div_u().coeff(0) == mono(2, {1, 0}, 1));
    CHECK(s.div_u().ucap() == 2);
    CHECK(USeries<LaurentPoly>(3).div_u().is_zero());

    USeries<LaurentPoly> t(3);
    t.coeff(2) = mono(2, {1, 0}, 1);
    t.coeff(3) = mono(2, {0, 1}, 1);
    USeries<LaurentPoly> d = t.div_u();
    CHECK(d.coeff(1) == mono(2, {1, 0}, 1));
    CHECK(d.coeff(2) == mono(2, {0, 1}, 1));
}

TEST_CASE("u-series division undoes multiplication up to the cap") {
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 20; ++trial) {
        auto rng = make_rng(7, "test/div_u_roundtrip", trial);
        Gen g(rng, cfg);
        USeries<LaurentPoly> s(cfg.ucap);
        for (int j = 0; j <= cfg.ucap; ++j)
            if (g.uniform(0, 1)) s.coeff(j) = g.poly(2);
        CHECK(s.shifted_up(1).div_u() == s.truncated(cfg.ucap - 1));
    }
    USeries<LaurentPoly> bad(2);
    bad.coeff(0) = mono(2, {0, 0}, 1);
    CHECK_THROWS_AS(bad.div_u(), std::domain_error);
}
