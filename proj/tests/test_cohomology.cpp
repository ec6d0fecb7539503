#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "prism/cohomology.hpp"

using namespace prism;

static PConnection trivial_conn(long p, int N, int r) {
    PConnection P;
    P.ctx = Context{p, N};
    P.d = 1;
    P.r = r;
    P.phi = {mat_zero(P.ctx, 1, r)};
    return P;
}

static PConnection scalar_conn(long p, int N, long c) {
    PConnection P = trivial_conn(p, N, 1);
    P.phi[0][0][0] = LaurentPoly::constant(P.ctx, 1, c);
    return P;
}

static PConnection upper_conn(std::mt19937_64& rng, long p, int N, int r) {
    PConnection P = trivial_conn(p, N, r);
    long mod = 1;
    for (int i = 0; i < N; ++i) mod *= p;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            long v = static_cast<long>(rng() % static_cast<unsigned long>(mod));
            if (j <= i) v *= p;
            P.phi[0][static_cast<size_t>(i)][static_cast<size_t>(j)] =
                LaurentPoly::constant(P.ctx, 1, v);
        }
    return P;
}

TEST_CASE("trivial rank-1 crystal mod p: all three cohomologies are the window") {
    WindowParams wp{2, 4, 2, 3};
    for (long p : {2L, 3L}) {
        PConnection P = trivial_conn(p, 1, 1);
        Stratification S = from_connection(P);
        BuiltComplex CA = build_cech_alexander(S, wp);
        BuiltComplex TOT = build_totalization(S, wp);
        BuiltComplex DR = build_de_rham(P, wp);
        assert_complex(CA);
        assert_complex(TOT);
        assert_complex(DR);
        std::vector<int> expect(static_cast<size_t>(2 * wp.t_window + 1), 1);
        CHECK(cohomology_ranks(CA, 0) == expect);
        CHECK(cohomology_ranks(CA, 1) == expect);
        CHECK(cohomology_ranks(TOT, 0) == expect);
        CHECK(cohomology_ranks(TOT, 1) == expect);
        CHECK(cohomology_ranks(DR, 0) == expect);
        CHECK(cohomology_ranks(DR, 1) == expect);
    }
}

TEST_CASE("d o d = 0 for random constant-matrix instances") {
    std::mt19937_64 rng(19);
    WindowParams wp{2, 4, 2, 3};
    for (long p : {2L, 3L})
        for (int r : {1, 2}) {
            PConnection P = upper_conn(rng, p, 2, r);
            Stratification S = from_connection(P);
            CHECK_NOTHROW(assert_complex(build_cech_alexander(S, wp)));
            CHECK_NOTHROW(assert_complex(build_totalization(S, wp)));
            CHECK_NOTHROW(assert_complex(build_de_rham(P, wp)));
        }
}

TEST_CASE("comparison of the three cohomologies with the stability gate") {
    std::mt19937_64 rng(23);
    WindowParams wp{2, 4, 2, 3};
    for (long p : {2L, 3L}) {
        PConnection P = upper_conn(rng, p, 2, 2);
        Stratification S = from_connection(P);
        CompareResult r = compare_rho(S, P, wp);
        CHECK(r.equal0);
        CHECK(r.equal1);
        CHECK(r.stable);
    }
}

TEST_CASE("scalar p-multiple connections compare correctly") {
    WindowParams wp{3, 5, 2, 3};
    for (long p : {2L, 3L})
        for (long c : {0L, 1L}) {
            PConnection P = scalar_conn(p, 2, c * p);
            Stratification S = from_connection(P);
            CompareResult r = compare_rho(S, P, wp);
            CHECK(r.equal0);
            CHECK(r.equal1);
        }
}

TEST_CASE("sigma de Rham matches plain de Rham after base change") {
    std::mt19937_64 rng(29);
    WindowParams wp{2, 4, 2, 2};
    for (long p : {2L, 3L}) {
        PConnection P = upper_conn(rng, p, 2, 2);
        SigmaConnection C;
        C.ctx = P.ctx;
        C.d = 1;
        C.r = 2;
        C.h = 1;
        C.phi = {{P.phi[0]}};
        SigmaConnection C2 = sigma_base_change(C, 2);
        SigmaCompareResult r = sigma_compare(P, C2, wp);
        CHECK(r.equal0);
        CHECK(r.equal1);
        CHECK(r.stable);
    }
}

TEST_CASE("non-constant phi escaping the window raises WindowTooSmall") {
    PConnection P = trivial_conn(2, 2, 1);
    // phi = 2 T^5: multiplication shifts T-weight upward past any small window
    LaurentPoly f(P.ctx, 1);
    f.add_term({5}, 2);
    P.phi[0][0][0] = f;
    WindowParams wp{2, 4, 2, 3};
    CHECK_THROWS_AS(build_de_rham(P, wp), WindowTooSmall);
}

TEST_CASE("negative-degree phi entries stay inside the quotient window") {
    // phi = p T^{-1}: downward shifts are part of the exact quotient
    PConnection P = trivial_conn(2, 2, 1);
    LaurentPoly f(P.ctx, 1);
    f.add_term({-1}, 2);
    P.phi[0][0][0] = f;
    WindowParams wp{3, 4, 2, 3};
    BuiltComplex DR = build_de_rham(P, wp);
    CHECK_NOTHROW(assert_complex(DR));
    Stratification S = from_connection(P);
    CHECK_NOTHROW(assert_complex(build_cech_alexander(S, wp)));
    CHECK_NOTHROW(assert_complex(build_totalization(S, wp)));
}
