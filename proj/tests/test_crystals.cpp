#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "prism/crystals.hpp"

using namespace prism;

// phi with strictly upper-triangular mod-p part: topologically nilpotent.
static Mat rnd_phi(std::mt19937_64& rng, const Context& c, int d, int r) {
    Mat m = mat_zero(c, d, r);
    long mod = 1;
    for (int i = 0; i < c.prec; ++i) mod *= c.p;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            long v = static_cast<long>(rng() % static_cast<unsigned long>(mod));
            if (j <= i) v *= c.p;  // diagonal and below divisible by p
            LaurentPoly e(c, d);
            e.add_term(std::vector<int>(static_cast<size_t>(d), 0), v);
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        }
    return m;
}

static PConnection rnd_conn(std::mt19937_64& rng, long p, int N, int d, int r) {
    PConnection P;
    P.ctx = Context{p, N};
    P.d = d;
    P.r = r;
    for (int i = 0; i < d; ++i) P.phi.push_back(rnd_phi(rng, P.ctx, d, r));
    if (d == 2) P.phi[1] = mat_mul(P.phi[0], P.phi[0]);  // force commutation
    return P;
}

TEST_CASE("stratification round trip and cocycle identity") {
    std::mt19937_64 rng(71);
    for (long p : {2L, 3L})
        for (int r : {1, 2})
            for (int it = 0; it < 10; ++it) {
                PConnection P = rnd_conn(rng, p, 2, 1, r);
                Stratification S = from_connection(P);
                CHECK(cocycle_check(S));
                PConnection Q = to_connection(S);
                CHECK(mat_equal(P.phi[0], Q.phi[0]));
            }
}

TEST_CASE("two-variable connections need commuting phi") {
    std::mt19937_64 rng(73);
    PConnection P = rnd_conn(rng, 2, 2, 2, 2);
    CHECK_NOTHROW(from_connection(P));
    // break commutativity
    PConnection Q = P;
    LaurentPoly one = LaurentPoly::one(Q.ctx, 2);
    Q.phi[1][0][1] = Q.phi[1][0][1] + one;
    Q.phi[1][1][0] = Q.phi[1][1][0] + one.scaled(2);
    bool commutes = mat_equal(mat_mul(Q.phi[0], Q.phi[1]), mat_mul(Q.phi[1], Q.phi[0]));
    if (!commutes) CHECK_THROWS_AS(from_connection(Q), NotCommuting);
}

TEST_CASE("non-nilpotent phi is rejected") {
    Context c{2, 2};
    PConnection P;
    P.ctx = c;
    P.d = 1;
    P.r = 1;
    Mat m = mat_zero(c, 1, 1);
    m[0][0] = LaurentPoly::one(c, 1);  // unit: theta_m never vanishes
    P.phi = {m};
    CHECK_THROWS_AS(from_connection(P), NotNilpotent);
}

TEST_CASE("corrupted stratification fails the cocycle test") {
    std::mt19937_64 rng(79);
    PConnection P = rnd_conn(rng, 2, 2, 1, 2);
    Stratification S = from_connection(P);
    // tamper with one nonzero higher component
    for (auto& [k, m] : S.theta) {
        if (k[0] == 1) {
            m[0][1] = m[0][1] + LaurentPoly::one(S.ctx, 1);
            break;
        }
    }
    bool ok = cocycle_check(S) && mat_equal(to_connection(S).phi[0], P.phi[0]);
    CHECK_FALSE(ok);
}

TEST_CASE("connection obeys the Leibniz rule") {
    std::mt19937_64 rng(83);
    Context c{3, 3};
    PConnection P = rnd_conn(rng, 3, 3, 1, 2);
    LaurentPoly f(c, 1);
    f.add_term({2}, 4);
    f.add_term({-1}, 7);
    std::vector<LaurentPoly> x{LaurentPoly::one(c, 1), LaurentPoly::monomial(c, 1, 0, 1)};
    std::vector<LaurentPoly> fx{f * x[0], f * x[1]};
    auto lhs = apply_connection(P, fx);
    auto rhs = apply_connection(P, x);
    for (int row = 0; row < 2; ++row) {
        LaurentPoly expect = f * rhs[0][static_cast<size_t>(row)] +
                             f.derivative(0).scaled(3) * x[static_cast<size_t>(row)];
        CHECK(lhs[0][static_cast<size_t>(row)] == expect);
    }
}

TEST_CASE("comparison isomorphism: inverse composition detects phi1 != phi2") {
    std::mt19937_64 rng(89);
    for (long p : {2L, 3L}) {
        PConnection P = rnd_conn(rng, p, 2, 1, 2);
        CHECK(verify_inverse(P, P, 8));
        PConnection Q = rnd_conn(rng, p, 2, 1, 2);
        if (!mat_equal(P.phi[0], Q.phi[0])) CHECK_FALSE(verify_inverse(Q, P, 8));
    }
}

TEST_CASE("descent compatibility and triple cocycle") {
    std::mt19937_64 rng(97);
    for (long p : {2L, 3L})
        for (int r : {1, 2})
            for (int it = 0; it < 3; ++it) {
                PConnection P = rnd_conn(rng, p, 2, 1, r);
                CHECK_NOTHROW(verify_descent(P, 10));
                CHECK_NOTHROW(verify_triple_cocycle(P, 10));
            }
}

TEST_CASE("sigma stratification, cocycle, and base change") {
    std::mt19937_64 rng(101);
    for (long p : {2L, 3L}) {
        SigmaConnection C;
        C.ctx = Context{p, 2};
        C.d = 1;
        C.r = 2;
        C.h = 2;
        Mat m0 = rnd_phi(rng, C.ctx, 1, 2);
        C.phi = {{m0}, {mat_mul(m0, m0)}};  // commuting pair of chart matrices
        auto theta = sigma_stratification(C);
        CHECK(sigma_cocycle_check(theta, C.ctx, C.d, C.r, C.h * C.d));
        SigmaConnection C3 = sigma_base_change(C, 3);
        auto theta3 = sigma_stratification(C3);
        CHECK(sigma_cocycle_check(theta3, C3.ctx, C3.d, C3.r, C3.h * C3.d));
    }
}

TEST_CASE("sigma connection components") {
    Context c{2, 3};
    SigmaConnection C;
    C.ctx = c;
    C.d = 1;
    C.r = 1;
    C.h = 2;
    Mat a = mat_zero(c, 1, 1), b = mat_zero(c, 1, 1);
    a[0][0] = LaurentPoly::constant(c, 1, 2);
    b[0][0] = LaurentPoly::constant(c, 1, 4);
    C.phi = {{a}, {b}};
    // x = T * Y1[1], one module component
    PdPoly x = PdPoly::pd_monomial(c, 1, 1, 6, 0, 1)
                   .times_laurent(LaurentPoly::monomial(c, 1, 0, 1));
    auto out = apply_sigma_connection(C, {x});
    // chart 1 (t=0): -phi1 x + p dx/dT + dx/dY1 = -2TY[1] + 2Y[1] + T
    PdPoly e0 = x.scaled(-2) +
                PdPoly::pd_monomial(c, 1, 1, 6, 0, 1).scaled(2) +
                PdPoly::from_laurent(LaurentPoly::monomial(c, 1, 0, 1), 1, 6);
    CHECK(out[0][0] == e0);
    // chart 2 (t=1): -phi2 x - dx/dY1 = -4TY[1] - T
    PdPoly e1 = x.scaled(-4) -
                PdPoly::from_laurent(LaurentPoly::monomial(c, 1, 0, 1), 1, 6);
    CHECK(out[1][0] == e1);
}
