#include <doctest.h>

#include "freecert/word_parser.hpp"
#include "test_support.hpp"

using namespace freecert;

namespace {

WordEnv sl2_env() {
    WordEnv env{GroupSpec::SL(2), {}};
    env.constants.emplace("g", make_element(env.spec, test::mat({{1, 1}, {0, 1}})));
    env.constants.emplace("k", make_element(env.spec, test::mat({{1, 0}, {1, 1}})));
    return env;
}

}  // namespace

TEST_CASE("parses constants, variables, inverses and powers") {
    WordEnv env = sl2_env();

    FreeProductWord w = parse_word("g x1 g^-1 x2^-1", env);
    REQUIRE(w.parts().size() == 4);
    CHECK(std::get<Element>(w.parts()[0]).matrix == env.constants.at("g").matrix);
    CHECK(std::get<Letter>(w.parts()[1]) == Letter{1, 1});
    CHECK(std::get<Element>(w.parts()[2]).matrix == inverse(env.constants.at("g").matrix));
    CHECK(std::get<Letter>(w.parts()[3]) == Letter{2, -1});

    CHECK(parse_word("x1 x1^-1", env).is_empty());
    CHECK(parse_word("x1^3", env).parts().size() == 3);
    CHECK(parse_word("x1^0", env).is_empty());

    FreeProductWord grouped = parse_word("(g x1)^-1", env);
    REQUIRE(grouped.parts().size() == 2);
    CHECK(std::get<Letter>(grouped.parts()[0]) == Letter{1, -1});
    CHECK(std::get<Element>(grouped.parts()[1]).matrix == inverse(env.constants.at("g").matrix));

    CHECK(parse_word("g k", env).parts().size() == 1);  // constants merge
    CHECK(parse_word("(x1 x2) (x2^-1 x1^-1)", env).is_empty());
}

TEST_CASE("parse errors carry positions") {
    WordEnv env = sl2_env();

    CHECK_THROWS_AS(parse_word("x1 (", env), ParseError);
    try {
        parse_word("x1 (", env);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }

    try {
        parse_word("g y1 g^-1", env);
        FAIL("unknown constant accepted");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("y1") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_word("", env), ParseError);
    CHECK_THROWS_AS(parse_word("x1 ^", env), ParseError);
    CHECK_THROWS_AS(parse_word("x1^x2", env), ParseError);
    CHECK_THROWS_AS(parse_word("x0", env), ParseError);
    CHECK_THROWS_AS(parse_word("x1 )", env), ParseError);
    CHECK_THROWS_AS(parse_word("x1 %", env), ParseError);
    CHECK_THROWS_AS(parse_word("(g x1", env), ParseError);
}

TEST_CASE("formatting round trip with names") {
    WordEnv env = sl2_env();
    FreeProductWord w = parse_word("g x1 g^-1 x2^-1", env);
    CHECK(format_word(w, env) == "g x1 g^-1 x2^-1");
    CHECK(format_word(FreeProductWord(), env) == "1");
    // re-parsing the formatted text gives the same word
    CHECK(parse_word(format_word(w, env), env) == w);
}
