#include <doctest.h>

#include "freecert/projective.hpp"
#include "test_support.hpp"

using namespace freecert;

namespace {

LaurentPoly t(long e) { return LaurentPoly::t(e); }

ProjPointL point(std::vector<LaurentPoly> coords) {
    return ProjPointL::normalize(std::move(coords));
}

MatL tau2() {
    MatL m(2);
    m.at(0, 0) = t(-1);
    m.at(1, 1) = t(1);
    return m;
}

MatL tau2_inv() {
    MatL m(2);
    m.at(0, 0) = t(1);
    m.at(1, 1) = t(-1);
    return m;
}

}  // namespace

TEST_CASE("normalization divides by the minimum valuation") {
    ProjPointL p = point({t(2), t(3)});
    CHECK(p.coords()[0] == LaurentPoly(1));
    CHECK(p.coords()[1] == t(1));

    ProjPointL q = point({t(1), LaurentPoly(1) + t(1), LaurentPoly(2)});
    CHECK(q.coords()[0] == t(1));
    CHECK(q.coords()[1] == LaurentPoly(1) + t(1));
    CHECK(q.coords()[2] == LaurentPoly(2));

    CHECK_THROWS_AS(point({LaurentPoly(), LaurentPoly()}), ZeroVector);
}

TEST_CASE("normalization is idempotent and scale invariant") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<LaurentPoly> raw{test::random_laurent(rng), test::random_laurent(rng),
                                     test::random_laurent(rng)};
        bool all_zero = raw[0].is_zero() && raw[1].is_zero() && raw[2].is_zero();
        if (all_zero) continue;
        ProjPointL p = point(raw);
        ProjPointL again = point(p.coords());
        CHECK(p.coords() == again.coords());

        LaurentPoly c = test::random_nonzero_laurent(rng);
        std::vector<LaurentPoly> scaled;
        for (const auto& x : raw) scaled.push_back(c * x);
        CHECK(proj_equal(point(scaled), p));

        // scaling by a monomial even fixes the representative
        std::vector<LaurentPoly> shifted;
        for (const auto& x : raw) shifted.push_back(x.shifted(-2));
        CHECK(point(shifted).coords() == p.coords());
    }
}

TEST_CASE("reduction evaluates at t = 0 and canonicalizes") {
    CHECK(reduce_pi(point({t(1), LaurentPoly(1) + t(1), LaurentPoly(2)})) ==
          ProjPointC::canonical({Rational(0), Rational(1), Rational(2)}));
    CHECK(reduce_pi(point({LaurentPoly(1), t(1)})) ==
          ProjPointC::canonical({Rational(1), Rational(0)}));
    // canonical scaling makes [3 : 0] equal [1 : 0]
    CHECK(reduce_pi(point({LaurentPoly(3), t(1)})) ==
          ProjPointC::canonical({Rational(1), Rational(0)}));
}

TEST_CASE("ball membership") {
    ProjPointL p = point({LaurentPoly(1), t(1)});
    CHECK(in_ball(p, {Rational(1), Rational(0)}));
    CHECK_FALSE(in_ball(p, {Rational(0), Rational(1)}));
    CHECK(in_ball(point({LaurentPoly(2), LaurentPoly(2) * t(1)}), {Rational(5), Rational(0)}));
    CHECK_THROWS_AS(in_ball(p, {Rational(0), Rational(0)}), ZeroVector);
}

TEST_CASE("hyperplane avoidance, both routes") {
    ProjPointL p = point({LaurentPoly(1), t(1)});
    CHECK(off_hyperplane(p, CovectorQ({Rational(1), Rational(0)})));
    CHECK_FALSE(off_hyperplane(p, CovectorQ({Rational(0), Rational(1)})));
    ProjPointL q = point({LaurentPoly(1), LaurentPoly(3)});
    CHECK_FALSE(off_hyperplane(q, CovectorQ({Rational(3), Rational(-1)})));
    CHECK_THROWS_AS(CovectorQ({Rational(0), Rational(0)}), ZeroVector);
}

TEST_CASE("tau maps the unit-coordinate locus into the expected balls") {
    SplitMix64 rng(505);
    const std::vector<Rational> e0{Rational(1), Rational(0)};
    const std::vector<Rational> e1{Rational(0), Rational(1)};
    for (int trial = 0; trial < 500; ++trial) {
        // nonnegative valuations, unit 0-th coordinate
        LaurentPoly a0 = LaurentPoly(test::random_nonzero_rational(rng));
        LaurentPoly a1;
        for (int k = 0; k < 3; ++k) {
            a0 += LaurentPoly::monomial(1 + static_cast<long>(rng.below(4)),
                                        test::random_rational(rng));
            a1 += LaurentPoly::monomial(static_cast<long>(rng.below(5)),
                                        test::random_rational(rng));
        }
        ProjPointL p = point({a0, a1});
        REQUIRE(off_hyperplane(p, CovectorQ(e0)));
        CHECK(in_ball(apply_matrix(tau2(), p), e0));

        // dually: unit last coordinate, tau^-1
        ProjPointL q = point({a1, a0});
        REQUIRE(off_hyperplane(q, CovectorQ(e1)));
        CHECK(in_ball(apply_matrix(tau2_inv(), q), e1));
    }
}

TEST_CASE("matrix action composes projectively") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 100; ++trial) {
        MatQ m1 = test::random_invertible(rng, 3);
        MatQ m2 = test::random_invertible(rng, 3);
        ProjPointL p = point({test::random_nonzero_laurent(rng), test::random_laurent(rng),
                              test::random_laurent(rng)});
        ProjPointL lhs = apply_matrix(to_laurent(m1) * to_laurent(m2), p);
        ProjPointL rhs = apply_matrix(to_laurent(m1), apply_matrix(to_laurent(m2), p));
        CHECK(proj_equal(lhs, rhs));
        CHECK(lhs.coords() == rhs.coords());  // normalization is canonical
    }
}

TEST_CASE("worked 2x2 instances") {
    // tau on [1 : 1]
    ProjPointL p = apply_matrix(tau2(), point({LaurentPoly(1), LaurentPoly(1)}));
    CHECK(p.coords()[0] == LaurentPoly(1));
    CHECK(p.coords()[1] == t(2));
    CHECK(reduce_pi(p) == ProjPointC::canonical({Rational(1), Rational(0)}));

    // boundary: [0 : 1] is fixed
    ProjPointL q = apply_matrix(tau2(), point({LaurentPoly(0), LaurentPoly(1)}));
    CHECK(reduce_pi(q) == ProjPointC::canonical({Rational(0), Rational(1)}));

    // tau^-1 on [1 : 1]
    ProjPointL r = apply_matrix(tau2_inv(), point({LaurentPoly(1), LaurentPoly(1)}));
    CHECK(r.coords()[0] == t(2));
    CHECK(r.coords()[1] == LaurentPoly(1));
    CHECK(reduce_pi(r) == ProjPointC::canonical({Rational(0), Rational(1)}));
}

TEST_CASE("constant lifts and projective equality") {
    ProjPointC z = ProjPointC::canonical({Rational(2), Rational(6)});
    CHECK(z.coords()[0] == 1);
    CHECK(z.coords()[1] == 3);
    ProjPointL lifted = ProjPointL::lift(z);
    CHECK(proj_equal(lifted, point({LaurentPoly(5), LaurentPoly(15)})));
    CHECK_FALSE(proj_equal(lifted, point({LaurentPoly(1), LaurentPoly(1)})));
}
