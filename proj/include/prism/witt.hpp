#pragma once
// p-typical Witt vectors of finite length L+1 (entries a_0..a_L).
//
// Ghost coordinates: w_n(a) = sum_{i<=n} p^i a_i^{p^(n-i)}.  The ring laws are
// realized by universal polynomials over Z, computed once per (p, L) by exact
// ghost solving (Dwork), cached, and then evaluated in arbitrary coefficient
// rings -- in particular evaluation in char p needs no division.

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "prism/laurent.hpp"

namespace prism {

inline constexpr int kWittLengthCap = 6;  // max L; desk-scale guard

struct WittVec {
    long p = 2;
    std::vector<LaurentPoly> a;  // length L+1

    int length() const { return static_cast<int>(a.size()); }
    int L() const { return length() - 1; }
};

namespace witt_detail {

inline void check_length(long /*p*/, int L) {
    if (L < 0 || L > kWittLengthCap)
        throw ConfigInvalid("Witt length L out of range [0, " +
                            std::to_string(kWittLengthCap) + "]");
}

// Ghost polynomial w_n in variables x_{off}..x_{off+n} of an `nv`-variable ring.
inline LaurentPoly ghost_poly(long p, int n, int nv, int off) {
    Context zz{p, 0};
    LaurentPoly w = LaurentPoly::zero(zz, nv);
    for (int i = 0; i <= n; ++i) {
        long e = 1;
        for (int k = 0; k < n - i; ++k) e *= p;
        w = w + LaurentPoly::monomial(zz, nv, off + i, 1).pow(e).scaled(p_power(p, i));
    }
    return w;
}

// Solve a_n = (g_n - sum_{i<n} p^i a_i^{p^(n-i)}) / p^n  for exact ghost data.
inline std::vector<LaurentPoly> from_ghost_exact(long p, const std::vector<LaurentPoly>& g) {
    std::vector<LaurentPoly> a;
    for (size_t n = 0; n < g.size(); ++n) {
        LaurentPoly rhs = g[n];
        for (size_t i = 0; i < n; ++i) {
            long e = 1;
            for (size_t k = 0; k < n - i; ++k) e *= p;
            rhs = rhs - a[i].pow(e).scaled(p_power(p, static_cast<long>(i)));
        }
        a.push_back(rhs.exact_div_p(static_cast<long>(n)));
    }
    return a;
}

enum class Law { Sum, Prod, Neg, Frob };

inline const std::vector<LaurentPoly>& universal(long p, int L, Law law) {
    static std::map<std::tuple<long, int, int>, std::vector<LaurentPoly>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, L, static_cast<int>(law));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    check_length(p, L);
    int nv = (law == Law::Sum || law == Law::Prod) ? 2 * (L + 1) : (L + 1);
    std::vector<LaurentPoly> ghosts;
    switch (law) {
        case Law::Sum:
            for (int n = 0; n <= L; ++n)
                ghosts.push_back(ghost_poly(p, n, nv, 0) + ghost_poly(p, n, nv, L + 1));
            break;
        case Law::Prod:
            for (int n = 0; n <= L; ++n)
                ghosts.push_back(ghost_poly(p, n, nv, 0) * ghost_poly(p, n, nv, L + 1));
            break;
        case Law::Neg:
            for (int n = 0; n <= L; ++n) ghosts.push_back(-ghost_poly(p, n, nv, 0));
            break;
        case Law::Frob:
            // F shifts ghosts: w_n(F a) = w_{n+1}(a); output length L.
            for (int n = 0; n + 1 <= L; ++n) ghosts.push_back(ghost_poly(p, n + 1, nv, 0));
            break;
    }
    return cache.emplace(key, from_ghost_exact(p, ghosts)).first->second;
}

// Evaluate a universal polynomial (nonnegative exponents, exact Z context) at
// elements of an arbitrary coefficient ring.
inline LaurentPoly eval_universal(const LaurentPoly& U, const std::vector<LaurentPoly>& vals) {
    if (vals.empty()) throw Error("eval_universal: no values");
    Context rctx = vals[0].ctx();
    int nd = vals[0].nvars();
    for (const auto& v : vals) rctx = combine_ctx(rctx, v.ctx());
    std::vector<std::map<int, LaurentPoly>> cache(vals.size());
    auto power = [&](size_t var, int e) -> const LaurentPoly& {
        auto itp = cache[var].find(e);
        if (itp != cache[var].end()) return itp->second;
        LaurentPoly pw = (e == 0) ? LaurentPoly::one(rctx, nd) : vals[var].pow(e);
        return cache[var].emplace(e, std::move(pw)).first->second;
    };
    LaurentPoly r = LaurentPoly::zero(rctx, nd);
    for (const auto& [e, c] : U.terms()) {
        LaurentPoly t = LaurentPoly::constant(rctx, nd, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * power(i, e[i]);
        r = r + t;
    }
    return r;
}

inline std::vector<LaurentPoly> concat(const WittVec& x, const WittVec& y) {
    std::vector<LaurentPoly> v = x.a;
    v.insert(v.end(), y.a.begin(), y.a.end());
    return v;
}

}  // namespace witt_detail

inline void check_same_shape(const WittVec& x, const WittVec& y) {
    if (x.p != y.p || x.length() != y.length()) throw Error("Witt vector shape mismatch");
}

inline WittVec witt_add(const WittVec& x, const WittVec& y) {
    check_same_shape(x, y);
    const auto& S = witt_detail::universal(x.p, x.L(), witt_detail::Law::Sum);
    WittVec r{x.p, {}};
    auto vals = witt_detail::concat(x, y);
    for (const auto& Sn : S) r.a.push_back(witt_detail::eval_universal(Sn, vals));
    return r;
}

inline WittVec witt_mul(const WittVec& x, const WittVec& y) {
    check_same_shape(x, y);
    const auto& P = witt_detail::universal(x.p, x.L(), witt_detail::Law::Prod);
    WittVec r{x.p, {}};
    auto vals = witt_detail::concat(x, y);
    for (const auto& Pn : P) r.a.push_back(witt_detail::eval_universal(Pn, vals));
    return r;
}

inline WittVec witt_neg(const WittVec& x) {
    const auto& N = witt_detail::universal(x.p, x.L(), witt_detail::Law::Neg);
    WittVec r{x.p, {}};
    for (const auto& Nn : N) r.a.push_back(witt_detail::eval_universal(Nn, x.a));
    return r;
}

inline WittVec witt_sub(const WittVec& x, const WittVec& y) { return witt_add(x, witt_neg(y)); }

inline WittVec witt_zero(long p, int L, Context ctx, int nvars) {
    witt_detail::check_length(p, L);
    WittVec r{p, {}};
    for (int i = 0; i <= L; ++i) r.a.push_back(LaurentPoly::zero(ctx, nvars));
    return r;
}

inline WittVec teichmuller(long p, int L, const LaurentPoly& x) {
    witt_detail::check_length(p, L);
    WittVec r{p, {x}};
    for (int i = 1; i <= L; ++i) r.a.push_back(LaurentPoly::zero(x.ctx(), x.nvars()));
    return r;
}

inline WittVec witt_one(long p, int L, Context ctx, int nvars) {
    return teichmuller(p, L, LaurentPoly::one(ctx, nvars));
}

// Ghost coordinates (computable in any ring; injective only without p-torsion).
inline std::vector<LaurentPoly> ghost_components(const WittVec& x) {
    std::vector<LaurentPoly> g;
    for (int n = 0; n <= x.L(); ++n) {
        LaurentPoly w = LaurentPoly::zero(x.a[0].ctx(), x.a[0].nvars());
        for (int i = 0; i <= n; ++i) {
            long e = 1;
            for (int k = 0; k < n - i; ++k) e *= x.p;
            w = w + x.a[static_cast<size_t>(i)].pow(e).scaled(p_power(x.p, i));
        }
        g.push_back(w);
    }
    return g;
}

// Recover entries from ghost components by successive exact division; throws
// NotDivisible / NonIntegral when the data is not in the image of the ghost map.
inline WittVec from_ghost(long p, const std::vector<LaurentPoly>& g) {
    witt_detail::check_length(p, static_cast<int>(g.size()) - 1);
    try {
        return WittVec{p, witt_detail::from_ghost_exact(p, g)};
    } catch (const NotDivisible& e) {
        throw NonIntegral(std::string("from_ghost: ghost data not integral: ") + e.what());
    }
}

// Frobenius: W_{L+1} -> W_L, the ghost shift.  Requires L >= 1.
inline WittVec frobenius(const WittVec& x) {
    if (x.L() < 1) throw ConfigInvalid("frobenius: need length >= 2");
    const auto& F = witt_detail::universal(x.p, x.L(), witt_detail::Law::Frob);
    WittVec r{x.p, {}};
    for (const auto& Fn : F) r.a.push_back(witt_detail::eval_universal(Fn, x.a));
    return r;
}

// Verschiebung: W_L -> W_{L+1}, the shift; FV = p.
inline WittVec verschiebung(const WittVec& x) {
    WittVec r{x.p, {LaurentPoly::zero(x.a[0].ctx(), x.a[0].nvars())}};
    r.a.insert(r.a.end(), x.a.begin(), x.a.end());
    witt_detail::check_length(x.p, r.L());
    return r;
}

// --- char-p reduction helpers ----------------------------------------------

// Is f mod p a p-th power in F_p[T_1^±..T_d^±]?  (F_p is perfect, so this is
// exactly: every exponent vector divisible by p.)
inline bool is_pth_power_mod_p(const LaurentPoly& f, long p) {
    LaurentPoly g = f.mod_p();
    for (const auto& [e, c] : g.terms())
        for (int k : e)
            if (k % p != 0) return false;
    return true;
}

// "Good" element: a mod p lies in the image of Frobenius, equivalently
// a = b^p + p c for some b, c.
inline bool is_good(const LaurentPoly& a) { return is_pth_power_mod_p(a, a.ctx().p); }

// Equality of classes in W(S) / {(0, c_1^p, c_2^p, ...)} for S = F_p[T^±]:
// subtract and test membership of the difference in the distinguished subset.
inline bool modp_class_equal(const WittVec& x, const WittVec& y) {
    WittVec d = witt_sub(x, y);
    if (!d.a[0].mod_p().is_zero()) return false;
    for (int i = 1; i <= d.L(); ++i)
        if (!is_pth_power_mod_p(d.a[static_cast<size_t>(i)], d.p)) return false;
    return true;
}

}  // namespace prism
