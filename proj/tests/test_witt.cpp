#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "prism/witt.hpp"

using namespace prism;

// Oracle: ghost components computed directly on integer vectors over Z.
static std::vector<Int> ghost_ints(long p, const std::vector<Int>& a) {
    std::vector<Int> w;
    for (size_t n = 0; n < a.size(); ++n) {
        Int acc = 0;
        for (size_t i = 0; i <= n; ++i) {
            Int t;
            mpz_pow_ui(t.get_mpz_t(), a[i].get_mpz_t(), p_power(p, static_cast<int>(n - i)).get_ui());
            acc += pow_int(Int(p), static_cast<int>(i)) * t;
        }
        w.push_back(acc);
    }
    return w;
}

static bool witt_same(const WittVec& x, const WittVec& y) {
    if (x.a.size() != y.a.size()) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!(x.a[i] == y.a[i])) return false;
    return true;
}

static WittVec const_vec(long p, const Context& c, const std::vector<long>& v) {
    WittVec w;
    w.p = p;
    for (long x : v) w.a.push_back(LaurentPoly::constant(c, 1, x));
    return w;
}

static std::vector<Int> entries(const WittVec& w) {
    std::vector<Int> out;
    for (const auto& f : w.a) {
        Int c = 0;
        auto it = f.terms().find(std::vector<int>{0});
        if (it != f.terms().end()) c = it->second;
        out.push_back(c);
    }
    return out;
}

TEST_CASE("sum and product laws against the ghost oracle over Z") {
    Context c{2, 0};
    for (long p : {2L, 3L}) {
        Context cc{p, 0};
        std::mt19937_64 rng(17 + p);
        for (int it = 0; it < 60; ++it) {
            std::vector<long> av, bv;
            for (int i = 0; i < 3; ++i) {
                av.push_back(static_cast<long>(rng() % 19) - 9);
                bv.push_back(static_cast<long>(rng() % 19) - 9);
            }
            WittVec a = const_vec(p, cc, av), b = const_vec(p, cc, bv);
            auto ga = ghost_ints(p, entries(a)), gb = ghost_ints(p, entries(b));
            auto gs = ghost_ints(p, entries(witt_add(a, b)));
            auto gp = ghost_ints(p, entries(witt_mul(a, b)));
            auto gn = ghost_ints(p, entries(witt_neg(a)));
            for (size_t n = 0; n < 3; ++n) {
                CHECK(gs[n] == ga[n] + gb[n]);
                CHECK(gp[n] == ga[n] * gb[n]);
                CHECK(gn[n] == -ga[n]);
            }
        }
    }
}

TEST_CASE("ring laws on polynomial entries") {
    Context c{2, 4};
    std::mt19937_64 rng(5);
    auto rnd = [&]() {
        WittVec w;
        w.p = 2;
        for (int i = 0; i < 3; ++i) {
            LaurentPoly f(c, 1);
            f.add_term({static_cast<int>(rng() % 3)}, static_cast<long>(rng() % 16));
            f.add_term({0}, static_cast<long>(rng() % 16));
            w.a.push_back(f);
        }
        return w;
    };
    for (int it = 0; it < 15; ++it) {
        WittVec a = rnd(), b = rnd(), d = rnd();
        CHECK(witt_same(witt_add(a, b), witt_add(b, a)));
        CHECK(witt_same(witt_mul(a, b), witt_mul(b, a)));
        CHECK(witt_same(witt_mul(a, witt_add(b, d)),
                      witt_add(witt_mul(a, b), witt_mul(a, d))));
        CHECK(witt_same(witt_add(a, witt_neg(a)), witt_zero(2, 2, c, 1)));
        CHECK(witt_same(witt_mul(a, witt_one(2, 2, c, 1)), a));
    }
}

TEST_CASE("teichmuller is multiplicative") {
    Context c{3, 0};
    LaurentPoly x(c, 1), y(c, 1);
    x.add_term({1}, 2);
    y.add_term({0}, 5);
    WittVec tx = teichmuller(3, 2, x), ty = teichmuller(3, 2, y);
    CHECK(witt_same(witt_mul(tx, ty), teichmuller(3, 2, x * y)));
}

TEST_CASE("frobenius shifts ghosts, FV = p") {
    Context c{2, 0};
    WittVec a = const_vec(2, c, {3, -5, 7, 2});
    auto g = ghost_ints(2, entries(a));
    WittVec fa = frobenius(a);
    auto gf = ghost_ints(2, entries(fa));
    CHECK(gf[0] == g[1]);
    CHECK(gf[1] == g[2]);
    CHECK(gf[2] == g[3]);
    WittVec va = verschiebung(a);
    auto gv = ghost_ints(2, entries(va));
    CHECK(gv[0] == 0);
    CHECK(gv[1] == 2 * g[0]);
    CHECK(gv[2] == 2 * g[1]);
    // F(V(a)) = p * a
    WittVec fva = frobenius(verschiebung(a));
    WittVec pa = witt_add(a, a);  // p * a at p = 2
    for (size_t i = 0; i < a.a.size(); ++i)
        CHECK(fva.a[i] == pa.a[i]);
}

TEST_CASE("from_ghost inverts ghost_components and rejects non-integral data") {
    Context c{3, 0};
    WittVec a = const_vec(3, c, {2, -1, 4});
    auto g = ghost_components(a);
    WittVec b = from_ghost(3, g);
    CHECK(witt_same(a, b));
    std::vector<LaurentPoly> bad{LaurentPoly::constant(c, 1, 1),
                                 LaurentPoly::constant(c, 1, 2)};
    CHECK_THROWS_AS(from_ghost(3, bad), NonIntegral);
}

TEST_CASE("mod-p class equality in W(S)/p") {
    Context c{2, 1};
    LaurentPoly t(c, 1);
    t.add_term({1}, 1);
    // a and a + V(c^2-style) differ by the distinguished subset
    WittVec a;
    a.p = 2;
    a.a = {t, t, t};
    WittVec shift;
    shift.p = 2;
    shift.a = {LaurentPoly(c, 1), t * t, t * t * t * t};
    WittVec b = witt_add(a, shift);
    CHECK(modp_class_equal(a, b));
    WittVec shift2;
    shift2.p = 2;
    shift2.a = {LaurentPoly(c, 1), t, LaurentPoly(c, 1)};
    WittVec b2 = witt_add(a, shift2);
    CHECK_FALSE(modp_class_equal(a, b2));
    // first-entry difference always detected
    WittVec b3 = a;
    b3.a[0] = t + LaurentPoly::one(c, 1);
    CHECK_FALSE(modp_class_equal(a, b3));
}

TEST_CASE("p-th power detection in characteristic p") {
    Context c{3, 1};
    LaurentPoly f(c, 1);
    f.add_term({3}, 2);
    f.add_term({-6}, 1);
    CHECK(is_pth_power_mod_p(f, 3));
    LaurentPoly g(c, 1);
    g.add_term({2}, 1);
    CHECK_FALSE(is_pth_power_mod_p(g, 3));
}
