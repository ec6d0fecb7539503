#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "prism/textio.hpp"

using namespace prism;

TEST_CASE("parse laurent terms with signs and powers") {
    Context c{5, 0};
    VarTable vt = VarTable::standard(2, 0);
    LaurentPoly f = parse_laurent("-3*T1^2*T2^-1 + 7 - T1", vt, c);
    CHECK(f.terms().at({2, -1}) == -3);
    CHECK(f.terms().at({0, 0}) == 7);
    CHECK(f.terms().at({1, 0}) == -1);
}

TEST_CASE("parse pd terms with brackets") {
    Context c{2, 0};
    VarTable vt = VarTable::standard(1, 2);
    PdPoly f = parse_pd("-3*T1^2*Y1[2] + Y2[1]*Y1[1] - 4", vt, c, 6);
    CHECK(f.terms().at({2, 0}).terms().at({2}) == -3);
    CHECK(f.terms().at({1, 1}).terms().at({0}) == 1);
    CHECK(f.terms().at({0, 0}).terms().at({0}) == -4);
}

TEST_CASE("round trip print then parse") {
    Context c{3, 3};
    VarTable vt = VarTable::standard(2, 1);
    PdPoly f = parse_pd("2*T1^-2*Y1[3] + T2^2 - 5*Y1[1] + 13", vt, c, 5);
    std::string s = pd_str(f, vt);
    PdPoly g = parse_pd(s, vt, c, 5);
    CHECK(f == g);
}

TEST_CASE("whitespace and ordering robustness") {
    Context c{2, 0};
    VarTable vt = VarTable::standard(1, 1);
    PdPoly a = parse_pd("T1*Y1[2] + 1", vt, c, 4);
    PdPoly b = parse_pd("1+Y1[2]*T1", vt, c, 4);
    CHECK(a == b);
}

TEST_CASE("parser rejects malformed input") {
    Context c{2, 0};
    VarTable vt = VarTable::standard(1, 1);
    CHECK_THROWS_AS(parse_pd("T1^", vt, c, 4), ConfigInvalid);
    CHECK_THROWS_AS(parse_pd("Q3", vt, c, 4), ConfigInvalid);
    CHECK_THROWS_AS(parse_pd("Y1[", vt, c, 4), ConfigInvalid);
    CHECK_THROWS_AS(parse_pd("1 ++ 2", vt, c, 4), ConfigInvalid);
}

TEST_CASE("zero and constants") {
    Context c{7, 2};
    VarTable vt = VarTable::standard(1, 0);
    LaurentPoly z = parse_laurent("0", vt, c);
    CHECK(z.is_zero());
    LaurentPoly k = parse_laurent("-50", vt, c);  // -50 mod 49 = 48
    CHECK(k.terms().at({0}) == 48);
}
