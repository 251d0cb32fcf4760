#include <doctest.h>

#include "test_util.hpp"

using namespace testutil;

TEST_CASE("rational literals parse in canonical form") {
    CHECK(parse_rat("3/4") == make_rat(3, 4));
    CHECK(parse_rat("-2") == Rat(-2));
    CHECK(parse_rat("+5") == Rat(5));
    CHECK(parse_rat("6/4") == make_rat(3, 2));
    CHECK(parse_rat("-6/4") == make_rat(-3, 2));
    CHECK(parse_rat("0/7") == Rat(0));
    CHECK(rat_str(parse_rat("6/4")) == "3/2");
    CHECK(rat_str(parse_rat("8/4")) == "2");
    CHECK(rat_str(parse_rat("-0")) == "0");
}

TEST_CASE("malformed rational literals are parse errors") {
    for (const char* bad : {"", "1/0", "1/00", "1/-2", "a", "1/2/3", "1.5", "/3", "2/", "1 /2", "--1"}) {
        CHECK_THROWS_AS(parse_rat(bad), ParseError);
    }
}

TEST_CASE("make_rat canonicalizes") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(-2, 4) == make_rat(-1, 2));
    CHECK(make_rat(0, 9) == Rat(0));
    CHECK_THROWS(make_rat(1, 0));
}

TEST_CASE("arithmetic stays exact and canonical") {
    Rat a = make_rat(1, 3), b = make_rat(1, 6);
    CHECK(a + b == make_rat(1, 2));
    CHECK(a - b == make_rat(1, 6));
    CHECK(a * b == make_rat(1, 18));
    CHECK(a / b == Rat(2));
    // equality is structural once canonical
    CHECK(rat_str(a + b) == "1/2");
    Rat big = make_rat(1, 3);
    for (int i = 0; i < 40; ++i) big = big * make_rat(3, 1) * make_rat(1, 3);
    CHECK(big == make_rat(1, 3));
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "1", "-7", "22/7", "-3/2", "1000000000000000007"}) {
        CHECK(rat_str(parse_rat(s)) == s);
    }
}
