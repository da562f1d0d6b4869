#include "cychains/expr.hpp"
#include "cychains/suite.hpp"

#include <doctest.h>

using namespace cychains;

TEST_CASE("multivector and form parsing round-trips through printing") {
    MultiVector mv = parse_multivector("3/2 * t^[1,-2] * d1^d2 + t1", 2);
    CHECK(mv.component(0x3) == LaurentPoly::monomial(2, {1, -2}, Rational(3, 2)));
    CHECK(mv.component(0) == LaurentPoly::variable(2, 1));
    CHECK(parse_multivector(mv.str(), 2) == mv);

    DiffForm f = parse_form("t2^-1 * dt1 - 2 * dt2", 2);
    CHECK(f.component(0x1) == LaurentPoly::monomial(2, {0, -1}, Rational(1)));
    CHECK(f.component(0x2) == LaurentPoly::constant(2, Rational(-2)));
    CHECK(parse_form(f.str(), 2) == f);

    // listed generator order carries its sorting sign
    CHECK(parse_multivector("d2^d1", 2) == parse_multivector("-1 * d1^d2", 2));
    CHECK(parse_multivector("d1^d1", 2).is_zero());
}

TEST_CASE("chain parsing round-trips") {
    HochChain c = parse_chain("t1 (x) t2 - 2 * t^[1,1] (x) t1 (x) t1", 2);
    CHECK(c.term_count() == 2);
    CHECK(parse_chain(c.str(), 2) == c);
}

TEST_CASE("volume parsing") {
    CHECK(parse_volume("w_std", 2) == VolumeForm::standard(2));
    CHECK(parse_volume("3 * t^[2,-1] * w_std", 2) ==
          VolumeForm::with_density(2, Rational(3), ExpVec{2, -1}));
    CHECK_THROWS_AS(parse_volume("0 * t^[0,0] * w_std", 2), std::invalid_argument);
}

TEST_CASE("evaluation of the documented examples") {
    CHECK(eval_expr("div (w_std) (d1)", 2) == "-1 * t^[-1,0]");
    CHECK(eval_expr("B (t1 (x) t2)", 2) ==
          "-1 (x) t^[0,1] (x) t^[1,0] + 1 (x) t^[1,0] (x) t^[0,1]");
    CHECK(eval_expr("schouten (t^[1,0]) (t^[0,1])", 2) == "0");
    CHECK(eval_expr("schouten (d1) (t1 * d1)", 2) == "(1) * d1");
    CHECK(eval_expr("contract (d1) (dt1^dt2)", 2) == "(1) * dt2");
    CHECK(eval_expr("d (t1 * dt2)", 2) == "(1) * dt1^dt2");
    CHECK(eval_expr("hkr (t1 (x) t2)", 2) == "(t^[1,0]) * dt2");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(eval_expr("frobnicate (d1)", 2), ParseError);
    CHECK_THROWS_AS(eval_expr("div (w_std) (d7)", 2), ParseError);
    CHECK_THROWS_AS(parse_form("dt1 +", 2), ParseError);
    try {
        parse_multivector("d1 ^^ d2", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("reports are byte-identical for a fixed config and seed") {
    SuiteConfig cfg;
    cfg.trials = 3;
    SuiteReport a = run_suite("koszul", cfg);
    SuiteReport b = run_suite("koszul", cfg);
    CHECK(report_json(a, cfg) == report_json(b, cfg));
    SuiteReport fails;
    fails.suite = "probe";
    IdentityReport bad;
    bad.id = "probe/failing";
    bad.pass = false;
    fails.identities.push_back(bad);
    CHECK_FALSE(fails.pass()); // the exit-1 path in the harness keys off this
}

TEST_CASE("unknown suites and invalid configs are rejected") {
    SuiteConfig cfg;
    CHECK_THROWS_AS(run_suite("nope", cfg), std::invalid_argument);
    SuiteConfig bad;
    bad.trials = 0;
    CHECK_THROWS_AS(run_suite("cartan", bad), std::invalid_argument);
}
