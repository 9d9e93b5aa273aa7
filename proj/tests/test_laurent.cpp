#include <doctest.h>

#include "test_support.hpp"

using namespace freecert;
using test::random_laurent;
using test::random_nonzero_laurent;

namespace {

LaurentPoly t(long e) { return LaurentPoly::t(e); }

}  // namespace

TEST_CASE("valuation picks the minimum exponent") {
    CHECK((t(2) + LaurentPoly::monomial(5, 3)).valuation() == Valuation::of(2));
    CHECK(LaurentPoly(1).valuation() == Valuation::of(0));
    CHECK(LaurentPoly().valuation() == Valuation::infinite());
    CHECK(Valuation::of(3) < Valuation::infinite());
    CHECK_FALSE(Valuation::infinite() < Valuation::of(3));
}

TEST_CASE("arithmetic stays canonical") {
    CHECK(t(-1) + LaurentPoly(1) + LaurentPoly(-1) == t(-1));
    CHECK(t(-1) * t(1) == LaurentPoly(1));
    CHECK((LaurentPoly(1) + t(1)) * (LaurentPoly(1) - t(1)) == LaurentPoly(1) - t(2));
    // cancellation leaves no zero coefficients stored
    LaurentPoly cancel = t(3) - t(3);
    CHECK(cancel.is_zero());
    CHECK(cancel.terms().empty());
}

TEST_CASE("evaluation at t = 0") {
    CHECK((LaurentPoly(2) + LaurentPoly::monomial(1, 5)).eval_at_zero() == 2);
    CHECK(t(3).eval_at_zero() == 0);
    CHECK_THROWS_AS((t(-1) + LaurentPoly(1)).eval_at_zero(), NegativeValuation);
}

TEST_CASE("ring laws on random triples") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * LaurentPoly(1) == a);
        CHECK(a + LaurentPoly() == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("valuation laws") {
    SplitMix64 rng(202);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly f = random_nonzero_laurent(rng), g = random_nonzero_laurent(rng);
        CHECK((f * g).valuation() ==
              Valuation::of(f.valuation().order + g.valuation().order));
        Valuation sum = (f + g).valuation();
        Valuation min = f.valuation() < g.valuation() ? f.valuation() : g.valuation();
        CHECK_FALSE(sum < min);
        if (f.valuation() != g.valuation()) CHECK(sum == min);
    }
}

TEST_CASE("evaluation at zero is a ring homomorphism on nonnegative valuations") {
    SplitMix64 rng(303);
    auto nonneg = [&](LaurentPoly p) {
        Valuation v = p.valuation();
        if (v.finite && v.order < 0) return p.shifted(-v.order);
        return p;
    };
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly f = nonneg(random_laurent(rng)), g = nonneg(random_laurent(rng));
        CHECK((f + g).eval_at_zero() == f.eval_at_zero() + g.eval_at_zero());
        CHECK((f * g).eval_at_zero() == f.eval_at_zero() * g.eval_at_zero());
    }
}

TEST_CASE("rational string round trip") {
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_to_string(rational_from_string("4/6")) == "2/3");
    CHECK_THROWS_AS(rational_from_string("x"), Error);
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
}
