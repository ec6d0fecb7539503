#pragma once
// Small exact-integer helpers shared across the library.  Coefficients are GMP
// integers throughout; these wrappers add the handful of p-adic primitives
// (valuation, p-power, binomials, factorial valuation) the algebra needs.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "prism/errors.hpp"

namespace prism {

using Int = mpz_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int p_power(long p, long e) {
    if (e < 0) throw Error("p_power: negative exponent");
    return pow_int(Int(p), static_cast<unsigned long>(e));
}

// v_p(n) for n != 0; returns `cap` for n == 0 (caller-supplied "infinity").
inline long valuation(const Int& n, long p, long cap) {
    if (n == 0) return cap;
    Int m = n;
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
        if (v >= cap) return cap;
    }
    return v;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// v_p(k!) = (k - s_p(k)) / (p - 1)  (Legendre).
inline long factorial_valuation(long k, long p) {
    long s = 0, m = k;
    while (m > 0) { s += m % p; m /= p; }
    return (k - s) / (p - 1);
}

// Base-p digit sum.
inline long digit_sum(long k, long p) {
    long s = 0;
    while (k > 0) { s += k % p; k /= p; }
    return s;
}

// Multi-index helpers (exponent vectors).
inline long multi_abs(const std::vector<int>& m) {
    long s = 0;
    for (int x : m) s += x;
    return s;
}

inline std::vector<int> multi_add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Product of binomial(a_i + b_i, a_i) over all axes: the structure constant of
// the divided-power basis, X^[a] * X^[b] = prod C(a_i+b_i, a_i) * X^[a+b].
inline Int pd_structure_constant(const std::vector<int>& a, const std::vector<int>& b) {
    Int c = 1;
    for (size_t i = 0; i < a.size(); ++i)
        c *= binomial(static_cast<unsigned long>(a[i] + b[i]), static_cast<unsigned long>(a[i]));
    return c;
}

// Enumerate all multi-indices in dim `d` with |m| <= bound, graded by weight.
inline std::vector<std::vector<int>> multis_up_to(int d, int bound) {
    std::vector<std::vector<int>> out;
    if (d == 0) { out.push_back({}); return out; }
    std::vector<int> cur(static_cast<size_t>(d), 0);
    struct Rec {
        int d;
        std::vector<std::vector<int>>* out;
        void go(std::vector<int>& cur, int pos, int rem) {
            if (pos == d - 1) {
                cur[static_cast<size_t>(pos)] = rem;
                out->push_back(cur);
                return;
            }
            for (int k = rem; k >= 0; --k) {
                cur[static_cast<size_t>(pos)] = k;
                go(cur, pos + 1, rem - k);
            }
        }
    } rec{d, &out};
    for (int w = 0; w <= bound; ++w) rec.go(cur, 0, w);
    return out;
}

}  // namespace prism
