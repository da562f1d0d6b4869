#include "cychains/generators.hpp"
#include "cychains/hochschild.hpp"

#include <doctest.h>

using namespace cychains;

namespace {

LaurentPoly mono(std::initializer_list<int> exps, long num, long den = 1) {
    return LaurentPoly::monomial(static_cast<int>(exps.size()), ExpVec(exps), Rational(num, den));
}

LaurentPoly one2() { return LaurentPoly::constant(2, Rational(1)); }

MultiDiffOp d1_cochain() { return MultiDiffOp::partial_cochain(2, midx_axis(2, 1)); }

HochChain chain(std::vector<LaurentPoly> entries) { return HochChain::elementary(2, entries); }

} // namespace

TEST_CASE("multiplication is a square-zero center of the bracket") {
    MultiDiffOp m0 = MultiDiffOp::multiplication(2);
    CHECK(gerstenhaber(m0, m0).is_zero());
    CHECK(cochain_differential(m0).is_zero());
    CHECK(cochain_differential(d1_cochain()).is_zero()); // derivations are closed
}

TEST_CASE("bracket with a 0-cochain applies the operator") {
    LaurentPoly f = mono({2, 0}, 1);
    MultiDiffOp fc = MultiDiffOp::constant_cochain(f);
    MultiDiffOp expected = MultiDiffOp::constant_cochain(f.partial(1));
    CHECK(gerstenhaber(d1_cochain(), fc) == expected);
    // two commuting derivations bracket to zero
    MultiDiffOp dd2 = MultiDiffOp::partial_cochain(2, midx_axis(2, 2));
    CHECK(gerstenhaber(d1_cochain(), dd2).is_zero());
}

TEST_CASE("differential of a second-order operator") {
    MultiIdx d1sq = midx_zero(2);
    d1sq[0] = 2;
    MultiDiffOp op = MultiDiffOp::partial_cochain(2, d1sq);
    // [m_0, d1^2] = -2 (d1 a)(d1 b)
    MultiDiffOp expected(2, 2, MultiDiffOp::Value::Scalar);
    expected.add_term(Slots{midx_axis(2, 1), midx_axis(2, 1)}, one2().scaled(Rational(-2)));
    CHECK(cochain_differential(op) == expected);
}

TEST_CASE("chain boundary on short chains") {
    LaurentPoly t1 = LaurentPoly::variable(2, 1);
    LaurentPoly t2 = LaurentPoly::variable(2, 2);
    CHECK(chain_boundary(chain({t1, t2})).is_zero());
    CHECK(chain_boundary(chain({t1})).is_zero());

    LaurentPoly a0 = mono({1, 0}, 1), a1 = mono({0, 1}, 1), a2 = mono({1, 1}, 1);
    HochChain expected = chain({a0 * a1, a2}) - chain({a0, a1 * a2}) + chain({a2 * a0, a1});
    CHECK(chain_boundary(chain({a0, a1, a2})) == expected);
}

TEST_CASE("action of the multiplication and of a derivation") {
    LaurentPoly a0 = mono({2, 0}, 1), a1 = mono({0, 1}, 1);
    HochChain c = chain({a0, a1});
    CHECK(cochain_action(MultiDiffOp::multiplication(2), c) == chain_boundary(c));
    // wrap and interior terms for a first-order 1-cochain
    HochChain expected = chain({a0.partial(1), a1}) + chain({a0, a1.partial(1)});
    CHECK(cochain_action(d1_cochain(), c) == expected);
    // too-high arity acts as zero
    MultiDiffOp big(2, 3, MultiDiffOp::Value::Scalar);
    big.add_term(Slots{midx_axis(2, 1), midx_axis(2, 1), midx_axis(2, 2)}, one2());
    CHECK(cochain_action(big, chain({a0})).is_zero());
}

TEST_CASE("cyclic differential on short chains") {
    LaurentPoly a0 = mono({3, 0}, 1), a1 = mono({0, 2}, 1);
    CHECK(connes_B(chain({a0})) == chain({one2(), a0}));
    CHECK(connes_B(chain({one2()})).is_zero());
    HochChain expected = chain({one2(), a0, a1}) - chain({one2(), a1, a0});
    CHECK(connes_B(chain({a0, a1})) == expected);
}

TEST_CASE("antisymmetrization of chains into forms") {
    LaurentPoly a0 = mono({1, 1}, 2);
    CHECK(hkr_chains(chain({a0})) == DiffForm::from_poly(a0));
    LaurentPoly t1 = LaurentPoly::variable(2, 1);
    LaurentPoly t2 = LaurentPoly::variable(2, 2);
    CHECK(hkr_chains(chain({t1, t2})) == DiffForm::basis(2, 0x2, t1));
    SuiteConfig cfg;
    for (uint64_t trial = 0; trial < 25; ++trial) {
        auto rng = make_rng(13, "test/hkr_cocycle", trial);
        Gen g(rng, cfg);
        HochChain c = g.chain(g.uniform(1, 3));
        CHECK(hkr_chains(chain_boundary(c)).is_zero());
        CHECK(hkr_chains(connes_B(c)) == de_rham(hkr_chains(c)));
    }
}

TEST_CASE("normalization and representation invariants") {
    MultiDiffOp m0 = MultiDiffOp::multiplication(2);
    CHECK(!m0.is_normalized());
    CHECK(d1_cochain().is_normalized());
    // chains strip constants from the bar slots
    LaurentPoly t1 = LaurentPoly::variable(2, 1);
    HochChain c = chain({t1, LaurentPoly::constant(2, Rational(5))});
    CHECK(c.is_zero());
    HochChain mixed = chain({t1, t1 + LaurentPoly::constant(2, Rational(5))});
    CHECK(mixed == chain({t1, t1}));
}

TEST_CASE("pairing of top-valued cochains with chains") {
    // phi = (a -> a * w_std)
    MultiDiffOp phi(2, 1, MultiDiffOp::Value::TopForm);
    phi.add_term(Slots{midx_zero(2)}, VolumeForm::standard(2).density_dt());
    LaurentPoly t1 = LaurentPoly::variable(2, 1);
    CHECK(pair_cochain_chain(phi, chain({t1, mono({-1, 0}, 1)})) == Rational(1));
    CHECK(pair_cochain_chain(phi, chain({one2(), t1})) == Rational(0));
    CHECK(pair_cochain_chain(MultiDiffOp(2, 1, MultiDiffOp::Value::TopForm),
                             chain({t1, mono({-1, 0}, 1)})) == Rational(0));
}
