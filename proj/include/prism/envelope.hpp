#pragma once
// Prismatic-envelope computations on the identity chart.
//
// D = R<Y_1..Y_d> is the pd-polynomial envelope with S_i = T_i - p Y_i; two
// delta-structures (delta_1 through the T-chart, delta_2 through the S-chart,
// congruent mod p) induce phi(Y_i) = p * z_{i,0} with
//   z_{i,0} = b_i + Y_i S_i^{p-1}
//           + Y_i^2 * sum_{k=0}^{p-1} ((T_i^k - S_i^k)/(T_i - S_i)) S_i^{p-1-k},
//   b_i = (delta_1(T_i) - delta_2(S_i)) / p,
// and delta extends to D by delta(f) = (phi(f) - f^p)/p.  The key iterate
// identity delta^n(Y_i) = z_{i,n-1} + (-1)^n Y_i^{p^n} / p^{(p^n-1)/(p-1)} is
// checked coefficientwise against the filtration Lambda'_n, whose membership
// criterion is the valuation threshold v_p(c_k) >= v_p(k!) - g_n(k).

#include <string>
#include <vector>

#include "prism/delta.hpp"
#include "prism/pd.hpp"

namespace prism {

struct Envelope {
    Context ctx;       // bounded precision required (divisions occur)
    int d = 1;         // number of T/Y pairs
    int bound = 8;     // pd degree bound
    DeltaStructure delta1;                  // images delta_1(T_i) in the T-chart
    std::vector<LaurentPoly> delta2_images; // delta_2(S_i), written in the S-variables

    // derived data
    std::vector<PdPoly> S;     // S_i = T_i - p Y_i
    std::vector<PdPoly> z0;    // z_{i,0}
    std::vector<PdPoly> phiY;  // phi(Y_i) = p z_{i,0}

    PdPoly zero() const { return PdPoly::zero(ctx, d, d, bound); }
    PdPoly one() const { return PdPoly::one(ctx, d, d, bound); }
    PdPoly T(int i) const {
        return PdPoly::from_laurent(LaurentPoly::monomial(ctx, d, i, 1), d, bound);
    }
    PdPoly Y(int i) const { return PdPoly::pd_monomial(ctx, d, d, bound, i, 1); }
};

namespace env_detail {

// Substitute the S-variables by S_i = T_i - p Y_i in a Laurent polynomial
// written in the S-chart (negative exponents go through the pd-unit inverse).
inline PdPoly into_envelope_S(const Envelope& E, const LaurentPoly& f) {
    PdSubstitution s;
    s.tctx = E.ctx;
    s.td = E.d;
    s.tnpd = E.d;
    s.tbound = E.bound;
    for (int i = 0; i < E.d; ++i) s.laurent_images.push_back(E.S[static_cast<size_t>(i)]);
    PdPoly g = PdPoly::from_laurent(f, 0, E.bound);
    // f has no pd variables; reuse pd_substitute with the Laurent images only.
    PdSubstitution s2 = s;
    s2.pd_images.clear();
    return pd_substitute(g, s2);
}

}  // namespace env_detail

inline Envelope make_envelope(Context ctx, int bound, const DeltaStructure& delta1,
                              const std::vector<LaurentPoly>& delta2_images) {
    if (ctx.exact()) throw ConfigInvalid("make_envelope: bounded precision required");
    Envelope E;
    E.ctx = ctx;
    E.d = delta1.d;
    E.bound = bound;
    E.delta1 = delta1;
    E.delta2_images = delta2_images;
    long p = ctx.p;
    for (int i = 0; i < E.d; ++i)
        E.S.push_back(E.T(i) - E.Y(i).scaled(p));
    // congruence precondition: delta_1 == delta_2 mod p on generators
    for (int i = 0; i < E.d; ++i) {
        LaurentPoly diff = delta1.images[static_cast<size_t>(i)] -
                           delta2_images[static_cast<size_t>(i)];
        if (!diff.with_prec(1).is_zero())
            throw ConfigInvalid("make_envelope: delta_1 != delta_2 mod p");
    }
    for (int i = 0; i < E.d; ++i) {
        PdPoly Ti = E.T(i), Si = E.S[static_cast<size_t>(i)], Yi = E.Y(i);
        PdPoly d1T = PdPoly::from_laurent(delta1.images[static_cast<size_t>(i)], E.d, bound);
        PdPoly d2S = env_detail::into_envelope_S(E, delta2_images[static_cast<size_t>(i)]);
        PdPoly b = (d1T - d2S).exact_div_p(1);
        // sum_{k=0}^{p-1} ((T^k - S^k)/(T - S)) S^{p-1-k}, with
        // (T^k - S^k)/(T - S) = sum_{j<k} T^j S^{k-1-j}  (polynomial identity).
        PdPoly tail = PdPoly::zero(b.ctx(), E.d, E.d, bound);
        for (long k = 0; k <= p - 1; ++k) {
            PdPoly quot = PdPoly::zero(b.ctx(), E.d, E.d, bound);
            for (long j = 0; j < k; ++j) quot = quot + Ti.pow(j) * Si.pow(k - 1 - j);
            tail = tail + quot * Si.pow(p - 1 - k);
        }
        PdPoly z = b + Yi * Si.pow(p - 1) + Yi * Yi * tail;
        E.z0.push_back(z);
        E.phiY.push_back(z.scaled(p));
    }
    return E;
}

// phi on the envelope: phi(c(T)) through delta_1, phi(Y^[k]) = (p z0)^k / k!
// with the unit part of k! divided out exactly (no precision loss beyond z0's).
inline PdPoly envelope_phi(const Envelope& E, const PdPoly& f) {
    long p = E.ctx.p;
    Context rctx = combine_ctx(E.z0[0].ctx(), f.ctx());
    PdPoly r = PdPoly::zero(rctx, E.d, E.d, E.bound);
    if (f.truncated()) r.mark_truncated();
    for (const auto& [k, c] : f.terms()) {
        PdPoly t = PdPoly::from_laurent(phi(E.delta1, c.with_prec(rctx.prec)), E.d, E.bound);
        for (int i = 0; i < E.d; ++i) {
            int ki = k[static_cast<size_t>(i)];
            if (ki == 0) continue;
            long v = factorial_valuation(ki, p);
            Int unit;
            mpz_divexact(unit.get_mpz_t(), factorial(static_cast<unsigned long>(ki)).get_mpz_t(),
                         p_power(p, v).get_mpz_t());
            t = t * E.z0[static_cast<size_t>(i)].pow(ki).scaled(p_power(p, ki - v))
                    .exact_div_int(unit);
        }
        r = r + t;
    }
    return r;
}

inline PdPoly envelope_delta(const Envelope& E, const PdPoly& f) {
    return (envelope_phi(E, f) - f.pow(E.ctx.p)).exact_div_p(1);
}

inline PdPoly envelope_delta_iter(const Envelope& E, const PdPoly& f, int n) {
    PdPoly r = f;
    for (int i = 0; i < n; ++i) r = envelope_delta(E, r);
    return r;
}

// Key identity phi(Y_i) = p z_{i,0}, with phi(Y_i) recomputed independently as
// (phi_1(T_i) - phi_2(S_i))/p through the two charts.
inline bool verify_phi_y(const Envelope& E, int i) {
    long p = E.ctx.p;
    PdPoly phi1T = PdPoly::from_laurent(E.delta1.phi_gen(i), E.d, E.bound);
    PdPoly phi2S = env_detail::into_envelope_S(E, E.delta2_images[static_cast<size_t>(i)])
                       .scaled(p) +
                   E.S[static_cast<size_t>(i)].pow(p);
    PdPoly lhs = (phi1T - phi2S).exact_div_p(1);
    return lhs.equals_mod(E.phiY[static_cast<size_t>(i)].with_prec(lhs.ctx().prec));
}

// --- Lambda'_n membership ---------------------------------------------------

// Minimal coefficient count s_{p,n}(k): greedy q = floor(k/p^n) top blocks plus
// the base-p digit sum of the remainder.
inline long s_pn(long k, long p, long n) {
    long pn = 1;
    for (long j = 0; j < n; ++j) pn *= p;
    return k / pn + digit_sum(k % pn, p);
}

// Allowed denominator exponent g_n(k) = (k - s_{p,n}(k)) / (p - 1).
inline long lambda_gain(long k, long p, long n) { return (k - s_pn(k, p, n)) / (p - 1); }

// Membership of a univariate pd element x = sum_k c_k(T) Y_i^[k] in Lambda'_n:
// v_p(c_k) >= v_p(k!) - g_n(k) for every k.  Inconclusive on truncated input.
inline bool lambda_membership(const Envelope& E, const PdPoly& x, int axis, long n) {
    long p = E.ctx.p;
    if (x.truncated())
        throw Inconclusive("lambda_membership: input truncated at pd bound " +
                           std::to_string(x.bound()));
    for (const auto& [k, c] : x.terms()) {
        long ktot = 0;
        for (size_t i = 0; i < k.size(); ++i) {
            if (static_cast<int>(i) != axis && k[i] != 0)
                throw ConfigInvalid("lambda_membership: element not univariate in the axis");
            ktot += k[i];
        }
        long need = factorial_valuation(ktot, p) - lambda_gain(ktot, p, n);
        if (need <= 0) continue;
        if (c.min_valuation(c.ctx().prec) < need) return false;
    }
    return true;
}

struct IterateCheck {
    bool top_coefficient_ok = false;
    bool remainder_in_lambda = false;
    Int expected_top;   // (-1)^n u_n with u_n = (p^n)! / p^{(p^n-1)/(p-1)}
    Int found_top;      // coefficient of Y^[p^n] (constant Laurent part)
    PdPoly z_prev;      // delta^n(Y) - (-1)^n u_n Y^[p^n]
};

// Verify delta^n(Y_i) = z_{i,n-1} + (-1)^n Y^{p^n} / p^{(p^n-1)/(p-1)}:
// (a) the Y^[p^n] coefficient is congruent to (-1)^n u_n mod p (the threshold
//     v_p((p^n)!) - g_{n-1}(p^n) equals 1), and
// (b) the remainder lies in D[Lambda'_{n-1}].
inline IterateCheck verify_iterate_formula(const Envelope& E, int axis, int n) {
    long p = E.ctx.p;
    long pn = 1;
    for (int j = 0; j < n; ++j) pn *= p;
    if (pn > E.bound)
        throw Inconclusive("verify_iterate_formula: pd bound below p^n");
    PdPoly dy = envelope_delta_iter(E, E.Y(axis), n);
    if (dy.truncated())
        throw Inconclusive("verify_iterate_formula: iterate truncated at the pd bound");
    IterateCheck out;
    long cn = factorial_valuation(pn, p);  // v_p((p^n)!) = (p^n - 1)/(p - 1)
    Int un;
    mpz_divexact(un.get_mpz_t(), factorial(static_cast<unsigned long>(pn)).get_mpz_t(),
                 p_power(p, cn).get_mpz_t());
    out.expected_top = (n % 2 ? -un : un);
    PdPoly::PdExp top(static_cast<size_t>(E.d), 0);
    top[static_cast<size_t>(axis)] = static_cast<int>(pn);
    LaurentPoly tc = dy.coefficient(top);
    out.found_top = tc.constant_term();
    // threshold: v_p((p^n)!) - g_{n-1}(p^n) = 1
    long thr = cn - lambda_gain(pn, p, n - 1);
    LaurentPoly resid = tc - LaurentPoly::constant(tc.ctx(), E.d, out.expected_top);
    out.top_coefficient_ok = resid.with_prec(static_cast<int>(thr)).is_zero();
    PdPoly rem = dy - PdPoly::pd_monomial(dy.ctx(), E.d, E.d, E.bound, axis,
                                          static_cast<int>(pn), out.expected_top);
    out.z_prev = rem;
    out.remainder_in_lambda = lambda_membership(E, rem, axis, n - 1);
    return out;
}

}  // namespace prism
