#include "ontomesh/rational.hpp"

#include "ontomesh/errors.hpp"

#include <doctest.h>

using namespace ontomesh;

TEST_CASE("rational literals parse exactly") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("+4") == Rational(4));
    CHECK(parse_rational("3/2") == Rational(Integer(3), Integer(2)));
    CHECK(parse_rational("-3/2") == Rational(Integer(-3), Integer(2)));
    CHECK(parse_rational("2/4") == Rational(Integer(1), Integer(2)));

    SUBCASE("decimals convert without rounding") {
        CHECK(parse_rational("0.05") == Rational(Integer(1), Integer(20)));
        CHECK(parse_rational(".2") == Rational(Integer(1), Integer(5)));
        CHECK(parse_rational("-1.5") == Rational(Integer(-3), Integer(2)));
        CHECK(parse_rational("0.125") == Rational(Integer(1), Integer(8)));
        CHECK(parse_rational("10.00") == Rational(10));
    }
}

TEST_CASE("malformed rational literals are rejected") {
    for (const char* bad : {"", "-", "1/0", "abc", "1.2.3", "--3", "3/-2", "1/", "/2", ".",
                            "1 /2", "0x10", "1e3"}) {
        CAPTURE(bad);
        CHECK(!try_parse_rational(bad).has_value());
        CHECK_THROWS_AS(parse_rational(bad), DomainError);
    }
}

TEST_CASE("formatting is lowest-terms p/q") {
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK(format_rational(Rational(Integer(1), Integer(2))) == "1/2");
    CHECK(format_rational(Rational(Integer(-3), Integer(2))) == "-3/2");
    CHECK(format_rational(Rational(Integer(2), Integer(4))) == "1/2");
    CHECK(format_rational(parse_rational("0.05")) == "1/20");
}

TEST_CASE("parse and format round trip") {
    for (const char* text : {"0", "1", "-1", "22/7", "-355/113", "1/20"}) {
        CHECK(format_rational(parse_rational(text)) == text);
    }
}
