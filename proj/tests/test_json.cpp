#include <doctest.h>

#include "freecert/json_io.hpp"
#include "test_support.hpp"

using namespace freecert;

TEST_CASE("scalar encodings match the declared formats") {
    CHECK(rational_json(Rational(3, 2)) == Json("3/2"));
    CHECK(rational_json(Rational(-7)) == Json("-7"));
    CHECK(rational_from_json(Json("2/4")) == Rational(1, 2));
    CHECK_THROWS_AS(rational_from_json(Json(3)), Error);

    LaurentPoly p = LaurentPoly::t(-1) + LaurentPoly::monomial(2, Rational(3, 2));
    Json expected = {{"-1", "1"}, {"2", "3/2"}};
    CHECK(laurent_json(p) == expected);
    CHECK(laurent_from_json(expected) == p);
    CHECK(laurent_json(LaurentPoly()) == Json::object());
    CHECK_THROWS_AS(laurent_from_json(Json{{"x", "1"}}), Error);
}

TEST_CASE("matrices and groups round trip") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        MatQ m = test::random_matrix(rng, 1 + static_cast<int>(rng.below(5)));
        CHECK(matrix_from_json(matrix_json(m)) == m);
    }
    CHECK_THROWS_AS(matrix_from_json(Json::array()), Error);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[\"1\",\"2\"],[\"3\"]]")), Error);

    for (GroupSpec spec : {GroupSpec::SL(2), GroupSpec::SL(5), GroupSpec::SO(3), GroupSpec::G2()})
        CHECK(group_from_json(group_json(spec)) == spec);
    CHECK(group_json(GroupSpec::SO(2)).dump() == R"({"family":"SO","k":2})");
    CHECK_THROWS_AS(group_from_json(Json{{"family", "E8"}}), Error);
}

TEST_CASE("laurent points normalize on ingest") {
    Json raw = Json::array({Json{{"2", "1"}}, Json{{"3", "5"}}});
    ProjPointL p = laurent_point_from_json(raw);
    CHECK(p.coords()[0] == LaurentPoly(1));
    CHECK(p.coords()[1] == LaurentPoly::monomial(1, Rational(5)));
    CHECK(laurent_point_from_json(laurent_point_json(p)).coords() == p.coords());
}

TEST_CASE("laurent polynomial random round trips") {
    SplitMix64 rng(62);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly p = test::random_laurent(rng);
        CHECK(laurent_from_json(laurent_json(p)) == p);
    }
}

TEST_CASE("certificates round trip through JSON") {
    std::vector<Element> gammas = {identity_element(GroupSpec::SL(2)),
                                   make_element(GroupSpec::SL(2), test::mat({{1, 1}, {1, 2}}))};
    CheckResult result =
        certify(gammas, identity_element(GroupSpec::SL(2)), Cocharacter{{-1, 1}});
    REQUIRE(std::holds_alternative<Certificate>(result));
    Certificate cert = std::get<Certificate>(std::move(result));
    cert.metadata = {{"created", "2026-01-01T00:00:00Z"}, {"seed", "1"}};
    VerificationRecord record;
    record.max_len = 4;
    record.words = 160;
    record.direct_eval_words = 160;
    cert.verification = record;

    Json j = certificate_json(cert);
    Certificate back = certificate_from_json(j);
    CHECK(back.spec == cert.spec);
    CHECK(back.exponents == cert.exponents);
    CHECK(back.h == cert.h);
    REQUIRE(back.etas.size() == cert.etas.size());
    for (std::size_t i = 0; i < cert.etas.size(); ++i) CHECK(back.etas[i] == cert.etas[i]);
    REQUIRE(back.pairings.size() == cert.pairings.size());
    for (std::size_t i = 0; i < cert.pairings.size(); ++i) {
        CHECK(back.pairings[i].i == cert.pairings[i].i);
        CHECK(back.pairings[i].j == cert.pairings[i].j);
        CHECK(back.pairings[i].sign_i == cert.pairings[i].sign_i);
        CHECK(back.pairings[i].sign_j == cert.pairings[i].sign_j);
        CHECK(back.pairings[i].value == cert.pairings[i].value);
    }
    CHECK(back.z == cert.z);
    CHECK(back.z_pairings.size() == cert.z_pairings.size());
    REQUIRE(back.verification.has_value());
    CHECK(back.verification->words == 160);
    CHECK(back.metadata.at("seed") == "1");
    CHECK(recheck_certificate(back).ok);

    // serialization is deterministic
    CHECK(certificate_json(back).dump(2) == j.dump(2));

    CHECK_THROWS_AS(certificate_from_json(Json{{"schema", "bogus"}}), Error);

    Json missing = j;
    missing.erase("z");
    CHECK_THROWS_AS(certificate_from_json(missing), Error);
    CHECK_THROWS_AS(certificate_from_json(Json(3)), Error);
}

TEST_CASE("violation reports serialize with indices and signs") {
    MatQ diag(2);
    diag.at(0, 0) = 1;
    diag.at(1, 1) = 2;
    EtaFamily family = eta_family_from_gl(GroupSpec::SL(2), {MatQ::identity(2), diag});
    CheckResult result = check_nonincidence(family);
    REQUIRE(std::holds_alternative<ViolationReport>(result));
    Json j = violation_json(std::get<ViolationReport>(result));
    CHECK(j.at("schema") == "freecert.violation/1");
    CHECK(j.at("vanishing").size() == 4);
    CHECK(j.at("vanishing")[0].contains("sign_i"));
}
