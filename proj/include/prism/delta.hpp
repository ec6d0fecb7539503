#pragma once
// Delta-ring structures on Laurent polynomial rings.
//
// A DeltaStructure on Z[T_1^±..T_d^±] (or its mod-p^N reduction) is given by
// the images delta(T_i); the lift phi(x) = x^p + p*delta(x) acts as the
// identity on integer constants and is evaluated by substitution
// T_i -> T_i^p + p*delta(T_i).  delta(f) = (phi(f) - f^p)/p by exact division,
// with a fully structural evaluation (additivity defect + product rule)
// available as an independent route.
//
// Also here: Joyal coordinates (ghost solving against phi-iterates), the
// high-congruence and Joyal-congruence lemma checks, and the truncated-Witt
// sections built from Joyal vectors reduced into W_{m+2}(S)/p.

#include <string>
#include <vector>

#include "prism/laurent.hpp"
#include "prism/witt.hpp"

namespace prism {

struct DeltaStructure {
    Context ctx;                       // base context of the ring
    int d = 1;                         // number of Laurent variables
    std::vector<LaurentPoly> images;   // delta(T_i), i = 0..d-1

    static DeltaStructure make(Context ctx, std::vector<LaurentPoly> images) {
        DeltaStructure D;
        D.ctx = ctx;
        D.d = static_cast<int>(images.size());
        D.images = std::move(images);
        return D;
    }
    LaurentPoly phi_gen(int i) const {
        return LaurentPoly::monomial(ctx, d, i, 1).pow(ctx.p) +
               images[static_cast<size_t>(i)].scaled(ctx.p);
    }
};

// phi(f): Frobenius lift by substitution (identity on integer coefficients).
inline LaurentPoly phi(const DeltaStructure& D, const LaurentPoly& f) {
    std::vector<LaurentPoly> im;
    for (int i = 0; i < D.d; ++i) im.push_back(D.phi_gen(i));
    return f.substitute(im);
}

inline LaurentPoly phi_iter(const DeltaStructure& D, const LaurentPoly& f, int n) {
    LaurentPoly r = f;
    for (int i = 0; i < n; ++i) r = phi(D, r);
    return r;
}

// delta(f) = (phi(f) - f^p)/p.  At finite precision the result is known one
// digit lower (absolute-precision model); PrecisionExhausted if none remain.
inline LaurentPoly delta_of(const DeltaStructure& D, const LaurentPoly& f) {
    return (phi(D, f) - f.pow(D.ctx.p)).exact_div_p(1);
}

inline LaurentPoly delta_iter(const DeltaStructure& D, const LaurentPoly& f, int n) {
    LaurentPoly r = f;
    for (int i = 0; i < n; ++i) r = delta_of(D, r);
    return r;
}

namespace delta_detail {

// delta on an integer constant: (c - c^p)/p.
inline Int delta_const(long p, const Int& c) {
    Int q = c - pow_int(c, static_cast<unsigned long>(p));
    Int r;
    mpz_divexact(r.get_mpz_t(), q.get_mpz_t(), Int(p).get_mpz_t());
    return r;
}

// Product rule: delta(ab) = a^p delta(b) + b^p delta(a) + p delta(a) delta(b).
inline LaurentPoly delta_product(long p, const LaurentPoly& a, const LaurentPoly& da,
                                 const LaurentPoly& b, const LaurentPoly& db) {
    return a.pow(p) * db + b.pow(p) * da + (da * db).scaled(p);
}

}  // namespace delta_detail

// Structural evaluation of delta(f): peel terms with the additivity defect
//   delta(a+b) = delta(a) + delta(b) - sum_{k=1}^{p-1} (C(p,k)/p) a^k b^{p-k},
// and evaluate monomials with the product rule from the generator images.
// Independent of the phi-route; delta_of is cross-checked against it in tests.
inline LaurentPoly delta_structural(const DeltaStructure& D, const LaurentPoly& f) {
    long p = D.ctx.p;
    // delta of a single monomial c * T^e.
    auto delta_mono = [&](const LaurentPoly::Exponent& e, const Int& c) -> LaurentPoly {
        LaurentPoly cur = LaurentPoly::constant(D.ctx, D.d, c);
        LaurentPoly dcur = LaurentPoly::constant(D.ctx, D.d, delta_detail::delta_const(p, c));
        for (int i = 0; i < D.d; ++i) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            LaurentPoly g = LaurentPoly::monomial(D.ctx, D.d, i, 1);
            LaurentPoly dg = D.images[static_cast<size_t>(i)];
            if (k < 0) {
                // delta(T^{-1}) = -delta(T) * T^{-p} * phi(T)^{-1}
                dg = -(dg * LaurentPoly::monomial(D.ctx, D.d, i, -p) * D.phi_gen(i).invert());
                g = g.invert();
                k = -k;
            }
            for (int j = 0; j < k; ++j) {
                dcur = delta_detail::delta_product(p, cur, dcur, g, dg);
                cur = cur * g;
            }
        }
        return dcur;
    };
    LaurentPoly acc = LaurentPoly::zero(D.ctx, D.d);       // running sum a
    LaurentPoly dacc = LaurentPoly::zero(D.ctx, D.d);      // delta(a)
    for (const auto& [e, c] : f.terms()) {
        LaurentPoly t(D.ctx, D.d);
        t.add_term(e, c);
        LaurentPoly dt = delta_mono(e, c);
        LaurentPoly defect = LaurentPoly::zero(D.ctx, D.d);
        for (long k = 1; k <= p - 1; ++k) {
            Int ck = binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(k));
            Int ckp;
            mpz_divexact(ckp.get_mpz_t(), ck.get_mpz_t(), Int(p).get_mpz_t());
            defect = defect + (acc.pow(k) * t.pow(p - k)).scaled(ckp);
        }
        dacc = dacc + dt - defect;
        acc = acc + t;
    }
    return dacc;
}

// Joyal coordinates delta_0(x)..delta_n(x): the unique solution of
// w_k(delta_0..delta_k) = phi^k(x), k = 0..n, by successive exact division.
inline std::vector<LaurentPoly> joyal_coords(const DeltaStructure& D, const LaurentPoly& x,
                                             int n) {
    long p = D.ctx.p;
    std::vector<LaurentPoly> a{x};
    LaurentPoly px = x;
    for (int k = 1; k <= n; ++k) {
        px = phi(D, px);  // phi^k(x)
        LaurentPoly rhs = px;
        for (int i = 0; i < k; ++i) {
            long e = 1;
            for (int j = 0; j < k - i; ++j) e *= p;
            rhs = rhs - a[static_cast<size_t>(i)].pow(e).scaled(p_power(p, i));
        }
        a.push_back(rhs.exact_div_p(k));
    }
    return a;
}

// Largest m (capped at `cap`) with delta_1 == delta_2 mod p^m on all samples.
inline long congruence_order(const DeltaStructure& D1, const DeltaStructure& D2,
                             const std::vector<LaurentPoly>& samples, long cap) {
    long m = cap;
    for (int i = 0; i < D1.d; ++i) {
        LaurentPoly diff = D1.images[static_cast<size_t>(i)] - D2.images[static_cast<size_t>(i)];
        m = std::min(m, diff.min_valuation(cap));
    }
    for (const auto& s : samples) {
        LaurentPoly diff = delta_of(D1, s) - delta_of(D2, s);
        m = std::min(m, diff.min_valuation(cap));
    }
    return m;
}

// High-congruence lemma: if delta_1(r) = delta_2(r) + p^m x, then for
// 0 <= l <= min(l_max, m):
//     delta_1^{1+l}(r) == delta_2^{1+l}(r) + p^{m-l} x^{p^l}   (mod p^{m+1-l}).
// Returns the witness x.  Throws LemmaViolated on failure.
inline LaurentPoly verify_high_congruence(const DeltaStructure& D1, const DeltaStructure& D2,
                                          const LaurentPoly& r, long m, long l_max) {
    long p = D1.ctx.p;
    LaurentPoly x;
    try {
        x = (delta_of(D1, r) - delta_of(D2, r)).exact_div_p(m);
    } catch (const NotDivisible&) {
        throw LemmaViolated("high congruence: delta_1(r) - delta_2(r) not divisible by p^m");
    }
    LaurentPoly it1 = delta_of(D1, r), it2 = delta_of(D2, r);
    for (long l = 0; l <= std::min(l_max, m); ++l) {
        if (l > 0) {
            it1 = delta_of(D1, it1);
            it2 = delta_of(D2, it2);
        }
        long pl = 1;
        for (long j = 0; j < l; ++j) pl *= p;
        LaurentPoly resid = it1 - it2 - x.pow(pl).scaled(p_power(p, m - l));
        if (!resid.with_prec(static_cast<int>(m + 1 - l)).is_zero())
            throw LemmaViolated("high congruence violated at l=" + std::to_string(l) +
                                ", m=" + std::to_string(m));
    }
    return x;
}

struct JoyalCongruenceResult {
    LaurentPoly witness;    // x with delta_1(r) = delta_2(r) + p^m x
    std::string note;       // provenance of the top-index convention
};

// Joyal-coordinate congruence: with x as above,
//   delta_{1,1+l}(r) == delta_{2,1+l}(r)            (mod p^{m-l}),  0 <= l <= m-1,
//   delta_{1,m+1}(r) == delta_{2,m+1}(r) + x^{p^m}  (mod p).
// The top identity is checked at index m+1 (corrected index; see report note).
inline JoyalCongruenceResult verify_joyal_congruence(const DeltaStructure& D1,
                                                     const DeltaStructure& D2,
                                                     const LaurentPoly& r, long m) {
    long p = D1.ctx.p;
    LaurentPoly x;
    try {
        x = (delta_of(D1, r) - delta_of(D2, r)).exact_div_p(m);
    } catch (const NotDivisible&) {
        throw LemmaViolated("joyal congruence: delta_1(r) - delta_2(r) not divisible by p^m");
    }
    auto j1 = joyal_coords(D1, r, static_cast<int>(m) + 1);
    auto j2 = joyal_coords(D2, r, static_cast<int>(m) + 1);
    for (long l = 0; l <= m - 1; ++l) {
        LaurentPoly diff = j1[static_cast<size_t>(1 + l)] - j2[static_cast<size_t>(1 + l)];
        if (!diff.with_prec(static_cast<int>(m - l)).is_zero())
            throw LemmaViolated("joyal congruence violated at coordinate " +
                                std::to_string(1 + l));
    }
    long pm = 1;
    for (long j = 0; j < m; ++j) pm *= p;
    LaurentPoly top = j1[static_cast<size_t>(m + 1)] - j2[static_cast<size_t>(m + 1)] -
                      x.pow(pm);
    if (!top.with_prec(1).is_zero())
        throw LemmaViolated("joyal congruence violated at top coordinate m+1");
    return JoyalCongruenceResult{x, "top-index corrected to m+1"};
}

// Truncated-Witt section: the Joyal vector (x, delta_1(x), .., delta_{m+1}(x))
// of length m+2, reduced mod p -- an element of W_{m+2}(S) whose class in
// W_{m+2}(S)/p is the section value.
inline WittVec ht_section(const DeltaStructure& D, long m, const LaurentPoly& x) {
    auto j = joyal_coords(D, x, static_cast<int>(m) + 1);
    WittVec w{D.ctx.p, {}};
    for (auto& c : j) w.a.push_back(c.mod_p());
    return w;
}

// Coincidence of the sections induced by two delta-structures of congruence
// order >= m+1: the classes in W_{m+2}(S)/p must agree on every sample.
inline bool sections_agree(const DeltaStructure& D1, const DeltaStructure& D2, long m,
                           const std::vector<LaurentPoly>& samples) {
    for (const auto& s : samples)
        if (!modp_class_equal(ht_section(D1, m, s), ht_section(D2, m, s))) return false;
    return true;
}

}  // namespace prism
