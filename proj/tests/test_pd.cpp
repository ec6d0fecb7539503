#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "prism/pd.hpp"

using namespace prism;

static PdPoly pdmono(const Context& c, int d, int npd, int bound, std::vector<int> k,
                     std::vector<int> e, long coef) {
    PdPoly f = PdPoly::zero(c, d, npd, bound);
    LaurentPoly l(c, d);
    l.add_term(e, coef);
    f.add_term(k, l);
    return f;
}

TEST_CASE("divided power multiplication rule") {
    Context c{2, 0};
    // Y^[2] * Y^[3] = C(5,2) Y^[5] = 10 Y^[5]
    PdPoly a = pdmono(c, 1, 1, 8, {2}, {0}, 1);
    PdPoly b = pdmono(c, 1, 1, 8, {3}, {0}, 1);
    PdPoly ab = a * b;
    CHECK(ab.terms().size() == 1);
    CHECK(ab.terms().at({5}).terms().at({0}) == 10);
    // two variables multiply componentwise
    PdPoly u = pdmono(c, 1, 2, 8, {1, 2}, {0}, 1);
    PdPoly v = pdmono(c, 1, 2, 8, {2, 1}, {0}, 1);
    PdPoly uv = u * v;
    CHECK(uv.terms().at({3, 3}).terms().at({0}) == 3 * 3);
}

TEST_CASE("bound truncation sets the flag exactly when terms drop") {
    Context c{2, 0};
    PdPoly a = pdmono(c, 1, 1, 3, {2}, {0}, 1);
    PdPoly b = pdmono(c, 1, 1, 3, {2}, {0}, 1);
    PdPoly ab = a * b;  // degree 4 > 3: dropped
    CHECK(ab.is_zero());
    CHECK(ab.truncated());
    PdPoly c2 = pdmono(c, 1, 1, 3, {1}, {0}, 1) * pdmono(c, 1, 1, 3, {1}, {0}, 1);
    CHECK_FALSE(c2.truncated());
    CHECK(c2.terms().at({2}).terms().at({0}) == 2);
}

TEST_CASE("ring axioms with pd and laurent parts mixed") {
    std::mt19937_64 rng(11);
    Context c{3, 3};
    auto rnd = [&]() {
        PdPoly f = PdPoly::zero(c, 1, 1, 6);
        for (int t = 0; t < 3; ++t) {
            int k = static_cast<int>(rng() % 4);
            int e = static_cast<int>(rng() % 5) - 2;
            f = f + pdmono(c, 1, 1, 6, {k}, {e}, static_cast<long>(rng() % 27));
        }
        return f;
    };
    for (int it = 0; it < 30; ++it) {
        PdPoly a = rnd(), b = rnd(), d = rnd();
        CHECK((a * b) == (b * a));
        CHECK((a * (b + d)) == (a * b + a * d));
        CHECK(((a * b) * d) == (a * (b * d)));
    }
}

TEST_CASE("invert unit with pd-nilpotent tail") {
    Context c{2, 4};
    // f = 1 + Y ; bounded pd algebra makes Y^[k] vanish past the bound
    PdPoly f = PdPoly::one(c, 1, 1, 5) + pdmono(c, 1, 1, 5, {1}, {0}, 1);
    PdPoly inv = f.invert();
    PdPoly prod = f * inv;
    // equal to 1 up to truncation-dropped tail
    CHECK(prod.terms().size() == 1);
    CHECK(prod.terms().at({0}).terms().at({0}) == 1);
}

TEST_CASE("pd derivative lowers exponent") {
    Context c{2, 0};
    PdPoly f = pdmono(c, 1, 1, 5, {3}, {1}, 7);
    PdPoly df = f.pd_derivative(0);
    CHECK(df.terms().at({2}).terms().at({1}) == 7);
}

TEST_CASE("substitution: pd var to difference of pd vars") {
    Context c{2, 0};
    // f = Y^[2] under Y -> Y2 - Y1: expect sum_{i+j=2} (-1)^i Y1^[i] Y2^[j]
    PdPoly f = pdmono(c, 1, 1, 4, {2}, {0}, 1);
    PdSubstitution s;
    s.tctx = c;
    s.td = 1;
    s.tnpd = 2;
    s.tbound = 4;
    s.laurent_images = {PdPoly::zero(c, 1, 2, 4)};
    LaurentPoly t(c, 1);
    t.add_term({1}, 1);
    s.laurent_images[0].add_term({0, 0}, t);
    s.pd_images = {PdSubstitution::PdImage{{{-1, 0}, {+1, 1}}}};
    PdPoly g = pd_substitute(f, s);
    CHECK(g.terms().at({2, 0}).terms().at({0}) == 1);
    CHECK(g.terms().at({1, 1}).terms().at({0}) == -1);
    CHECK(g.terms().at({0, 2}).terms().at({0}) == 1);
}

TEST_CASE("substitution distributes over products") {
    std::mt19937_64 rng(3);
    Context c{3, 2};
    PdSubstitution s;
    s.tctx = c;
    s.td = 1;
    s.tnpd = 1;
    s.tbound = 6;
    LaurentPoly img(c, 1);
    img.add_term({1}, 1);
    img.add_term({0}, 3);
    s.laurent_images = {PdPoly::zero(c, 1, 1, 6)};
    s.laurent_images[0].add_term({0}, img);
    s.pd_images = {PdSubstitution::PdImage{{{+1, 0}}}};
    auto rnd = [&]() {
        PdPoly f = PdPoly::zero(c, 1, 1, 6);
        for (int t = 0; t < 3; ++t)
            f = f + pdmono(c, 1, 1, 6, {static_cast<int>(rng() % 3)},
                           {static_cast<int>(rng() % 3)}, static_cast<long>(rng() % 9));
        return f;
    };
    for (int it = 0; it < 20; ++it) {
        PdPoly a = rnd(), b = rnd();
        CHECK(pd_substitute(a * b, s) == (pd_substitute(a, s) * pd_substitute(b, s)));
    }
}

TEST_CASE("exact_div_p on pd polynomials") {
    Context c{2, 4};
    PdPoly f = pdmono(c, 1, 1, 4, {1}, {0}, 4) + pdmono(c, 1, 1, 4, {2}, {1}, 8);
    PdPoly g = f.exact_div_p(2);
    CHECK(g.ctx().prec == 2);
    CHECK(g.terms().at({1}).terms().at({0}) == 1);
    CHECK(g.terms().at({2}).terms().at({1}) == 2);
}
