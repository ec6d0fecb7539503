#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "prism/cosimplicial.hpp"

using namespace prism;

static CosimplicialSpec spec(Flavor f, long p, int d, int h = 2) {
    CosimplicialSpec s;
    s.flavor = f;
    s.ctx = Context{p, 4};
    s.d = d;
    s.bound = 6;
    s.h = h;
    return s;
}

TEST_CASE("double face on T: p0 p0 (T) = p1 p0 (T) = T - p X_2") {
    CosimplicialSpec s = spec(Flavor::Plain, 2, 1);
    PdPoly T0 = PdPoly::from_laurent(LaurentPoly::monomial(s.ctx, 1, 0, 1),
                                     level_npd(s, 0), s.bound);
    PdPoly a = pd_substitute(pd_substitute(T0, face_map(s, 0, 0)), face_map(s, 1, 0));
    PdPoly b = pd_substitute(pd_substitute(T0, face_map(s, 0, 0)), face_map(s, 1, 1));
    CHECK(a == b);
    // T - p X_2 at level 2 (pd vars X1, X2)
    PdPoly expect = PdPoly::from_laurent(LaurentPoly::monomial(s.ctx, 1, 0, 1),
                                         level_npd(s, 2), s.bound);
    PdPoly x2 = PdPoly::pd_monomial(s.ctx, 1, level_npd(s, 2), s.bound, 1, 1,
                                    Int(-s.ctx.p));
    CHECK(a == expect + x2);
}

TEST_CASE("cosimplicial identities hold for all flavors") {
    for (long p : {2L, 3L}) {
        CHECK_NOTHROW(verify_cosimplicial_identities(spec(Flavor::Plain, p, 1), 3));
        CHECK_NOTHROW(verify_cosimplicial_identities(spec(Flavor::Tilde, p, 1), 3));
        CHECK_NOTHROW(verify_cosimplicial_identities(spec(Flavor::Sigma, p, 1, 2), 3));
    }
    CHECK_NOTHROW(verify_cosimplicial_identities(spec(Flavor::Plain, 2, 2), 2));
    CHECK_NOTHROW(verify_cosimplicial_identities(spec(Flavor::Sigma, 2, 2, 2), 2));
}

TEST_CASE("degeneracy retracts the first face") {
    // sigma^0 d^0 = id and sigma^0 d^1 = id on level-0 generators
    for (Flavor f : {Flavor::Plain, Flavor::Tilde, Flavor::Sigma}) {
        CosimplicialSpec s = spec(f, 2, 1);
        for (const PdPoly& g : level_generators(s, 0)) {
            PdPoly a = pd_substitute(pd_substitute(g, face_map(s, 0, 0)),
                                     degeneracy_map(s, 1, 0));
            PdPoly b = pd_substitute(pd_substitute(g, face_map(s, 0, 1)),
                                     degeneracy_map(s, 1, 0));
            CHECK(a == g);
            CHECK(b == g);
        }
    }
}

TEST_CASE("tilde flavor fixes T along p0") {
    CosimplicialSpec s = spec(Flavor::Tilde, 3, 1);
    PdPoly T0 = PdPoly::from_laurent(LaurentPoly::monomial(s.ctx, 1, 0, 1),
                                     level_npd(s, 0), s.bound);
    PdPoly img = pd_substitute(T0, face_map(s, 0, 0));
    PdPoly expect = PdPoly::from_laurent(LaurentPoly::monomial(s.ctx, 1, 0, 1),
                                         level_npd(s, 1), s.bound);
    CHECK(img == expect);
    // p0(Y) = Y + Z_1
    PdPoly Y = PdPoly::pd_monomial(s.ctx, 1, level_npd(s, 0), s.bound,
                                   tilde_Y(s, 0), 1);
    PdPoly imgY = pd_substitute(Y, face_map(s, 0, 0));
    PdPoly eY = PdPoly::pd_monomial(s.ctx, 1, level_npd(s, 1), s.bound, tilde_Y(s, 0), 1) +
                PdPoly::pd_monomial(s.ctx, 1, level_npd(s, 1), s.bound, tilde_Z(s, 1, 0), 1);
    CHECK(imgY == eY);
}

TEST_CASE("sigma flavor chart coupling along p0") {
    CosimplicialSpec s = spec(Flavor::Sigma, 2, 1, 2);
    // p0(Y_1) = Y_1 - X_1^{(1)} + X_1^{(2)}
    PdPoly Y1 = PdPoly::pd_monomial(s.ctx, 1, level_npd(s, 0), s.bound, sigma_Y(s, 1, 0), 1);
    PdPoly img = pd_substitute(Y1, face_map(s, 0, 0));
    int n1 = level_npd(s, 1);
    PdPoly expect =
        PdPoly::pd_monomial(s.ctx, 1, n1, s.bound, sigma_Y(s, 1, 0), 1) +
        PdPoly::pd_monomial(s.ctx, 1, n1, s.bound, sigma_X(s, 1, 1, 1, 0), 1).scaled(-1) +
        PdPoly::pd_monomial(s.ctx, 1, n1, s.bound, sigma_X(s, 1, 2, 1, 0), 1);
    CHECK(img == expect);
}
