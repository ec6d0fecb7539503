#pragma once
// Exact linear algebra over the local principal ideal ring Z/p^N.
//
// Every matrix is equivalent to diag(p^{v_1}, .., p^{v_k}, 0..) by invertible
// row/column operations (pivot = entry of globally minimal p-valuation); all
// arithmetic stays below p^N (p <= 7, N <= 10 fits comfortably in int64).
// Cohomology of a complex of free Z/p^N-modules is computed from kernels and
// presentations: H = ker(G)/im(F) ~ R^t / L with L the x-projection of
// ker[K | F], and the elementary divisors read off a final diagonalization.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "prism/errors.hpp"

namespace prism {

struct ZModMatrix {
    int rows = 0, cols = 0;
    long p = 2;
    int N = 1;
    long long mod = 2;  // p^N
    std::vector<long long> a;  // row-major

    ZModMatrix() = default;
    ZModMatrix(int r, int c, long p_, int N_) : rows(r), cols(c), p(p_), N(N_) {
        mod = 1;
        for (int i = 0; i < N_; ++i) mod *= p_;
        a.assign(static_cast<size_t>(r) * static_cast<size_t>(c), 0);
    }
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    void set(int r, int c, long long v) {
        long long w = v % mod;
        if (w < 0) w += mod;
        at(r, c) = w;
    }
};

namespace zmod_detail {

inline long long mulmod(long long x, long long y, long long m) { return (x * y) % m; }

inline int val_of(long long x, long p, int N) {
    if (x == 0) return N;
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return std::min(v, N);
}

inline long long inv_unit(long long u, long long m) {
    // extended Euclid; u is a unit mod m
    long long a = u % m, b = m, x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (a != 1 && a != -1) throw Error("inv_unit: not a unit");
    long long r = (a == 1 ? x0 : -x0) % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace zmod_detail

struct SmithResult {
    std::vector<int> diag_vals;  // valuations of the diagonal entries (pivot rank many)
    ZModMatrix V;                // column transform: D = U A V; kernel(A) = V kernel(D)
};

// Diagonalize by invertible row/column operations; records only the column
// transform (sufficient for kernels and quotient presentations).
inline SmithResult smith(ZModMatrix A) {
    const long p = A.p;
    const int N = A.N;
    const long long m = A.mod;
    SmithResult out;
    out.V = ZModMatrix(A.cols, A.cols, p, N);
    for (int i = 0; i < A.cols; ++i) out.V.at(i, i) = 1;
    int k = 0;
    int limit = std::min(A.rows, A.cols);
    while (k < limit) {
        // locate entry of minimal valuation in the trailing submatrix
        int bi = -1, bj = -1, bv = N;
        for (int i = k; i < A.rows; ++i)
            for (int j = k; j < A.cols; ++j) {
                int v = zmod_detail::val_of(A.at(i, j), p, N);
                if (v < bv) { bv = v; bi = i; bj = j; }
            }
        if (bi < 0) break;  // all zero
        // move pivot to (k, k)
        if (bi != k)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(bi, j), A.at(k, j));
        if (bj != k) {
            for (int i = 0; i < A.rows; ++i) std::swap(A.at(i, bj), A.at(i, k));
            for (int i = 0; i < out.V.rows; ++i) std::swap(out.V.at(i, bj), out.V.at(i, k));
        }
        // normalize pivot to p^bv
        long long pv = 1;
        for (int t = 0; t < bv; ++t) pv *= p;
        long long unit = A.at(k, k) / pv;  // unit mod p^{N-bv}; lift to a unit mod p^N
        if (unit % p == 0) throw Error("smith: pivot normalization failed");
        long long uinv = zmod_detail::inv_unit(unit % m, m);
        for (int j = k; j < A.cols; ++j) A.at(k, j) = zmod_detail::mulmod(A.at(k, j), uinv, m);
        // eliminate the rest of column k (row ops) and row k (column ops)
        for (int i = k + 1; i < A.rows; ++i) {
            long long f = A.at(i, k) / pv;
            if (A.at(i, k) % pv != 0) throw Error("smith: minimality violated");
            if (f == 0) continue;
            for (int j = k; j < A.cols; ++j) {
                long long w = (A.at(i, j) - zmod_detail::mulmod(f, A.at(k, j), m)) % m;
                A.at(i, j) = w < 0 ? w + m : w;
            }
        }
        for (int j = k + 1; j < A.cols; ++j) {
            long long f = A.at(k, j) / pv;
            if (A.at(k, j) % pv != 0) throw Error("smith: minimality violated (col)");
            if (f == 0) continue;
            for (int i = k; i < A.rows; ++i) {
                long long w = (A.at(i, j) - zmod_detail::mulmod(f, A.at(i, k), m)) % m;
                A.at(i, j) = w < 0 ? w + m : w;
            }
            for (int i = 0; i < out.V.rows; ++i) {
                long long w = (out.V.at(i, j) - zmod_detail::mulmod(f, out.V.at(i, k), m)) % m;
                out.V.at(i, j) = w < 0 ? w + m : w;
            }
        }
        out.diag_vals.push_back(bv);
        ++k;
    }
    return out;
}

// Generators of ker(A) = { x : A x = 0 } as columns of the returned matrix:
// for diagonal p^v (v < N) the column p^{N-v} * V_col; zero diagonals and
// unprocessed columns contribute V_col itself.
inline ZModMatrix kernel_generators(const ZModMatrix& A) {
    SmithResult s = smith(A);
    std::vector<std::pair<int, long long>> gens;  // (column of V, scale)
    int k = static_cast<int>(s.diag_vals.size());
    for (int i = 0; i < k; ++i) {
        int v = s.diag_vals[static_cast<size_t>(i)];
        if (v == 0) continue;  // unit pivot: only x_i = 0
        long long scale = 1;
        for (int t = 0; t < A.N - v; ++t) scale *= A.p;
        gens.push_back({i, scale});
    }
    for (int j = k; j < A.cols; ++j) gens.push_back({j, 1});
    ZModMatrix K(A.cols, static_cast<int>(gens.size()), A.p, A.N);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g)
        for (int i = 0; i < A.cols; ++i)
            K.at(i, g) = zmod_detail::mulmod(s.V.at(i, gens[static_cast<size_t>(g)].first),
                                             gens[static_cast<size_t>(g)].second, A.mod);
    return K;
}

// Elementary divisor exponents of H = ker(G) / im(F) for the complex
// R^a --F--> R^b --G--> R^c (so F is b x a, G is c x b); exponents are the
// e in p^e, sorted, with e = N for free R-summands; e = 0 entries dropped.
inline std::vector<int> cohomology_divisors(const ZModMatrix& F, const ZModMatrix& G) {
    if (F.rows != G.cols) throw Error("cohomology_divisors: shape mismatch");
    const long p = G.p;
    const int N = G.N;
    ZModMatrix K = kernel_generators(G);  // b x t
    int t = K.cols;
    if (t == 0) return {};
    // L = { x in R^t : K x in im F }  =  x-projection of ker [K | F]
    ZModMatrix KF(K.rows, t + F.cols, p, N);
    for (int i = 0; i < K.rows; ++i) {
        for (int j = 0; j < t; ++j) KF.at(i, j) = K.at(i, j);
        for (int j = 0; j < F.cols; ++j) KF.at(i, t + j) = F.at(i, j);
    }
    ZModMatrix ker = kernel_generators(KF);
    ZModMatrix L(t, ker.cols, p, N);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < ker.cols; ++j) L.at(i, j) = ker.at(i, j);
    // invariants of R^t / column-span(L)
    SmithResult s = smith(L);
    std::vector<int> exps;
    int k = static_cast<int>(s.diag_vals.size());
    for (int i = 0; i < k; ++i) {
        int v = std::min(s.diag_vals[static_cast<size_t>(i)], N);
        if (v > 0) exps.push_back(v);
    }
    for (int i = k; i < t; ++i) exps.push_back(N);
    std::sort(exps.begin(), exps.end());
    return exps;
}

// --- independent oracle: Gaussian elimination over F_p ----------------------

inline int fp_rank(ZModMatrix A) {
    if (A.N != 1) throw Error("fp_rank: prime field only");
    const long long m = A.mod;
    int rank = 0;
    for (int col = 0; col < A.cols && rank < A.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < A.rows; ++i)
            if (A.at(i, col) % m != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(rank, j));
        long long inv = zmod_detail::inv_unit(A.at(rank, col), m);
        for (int j = 0; j < A.cols; ++j) A.at(rank, j) = (A.at(rank, j) * inv) % m;
        for (int i = 0; i < A.rows; ++i) {
            if (i == rank || A.at(i, col) == 0) continue;
            long long f = A.at(i, col);
            for (int j = 0; j < A.cols; ++j) {
                long long w = (A.at(i, j) - f * A.at(rank, j)) % m;
                A.at(i, j) = w < 0 ? w + m : w;
            }
        }
        ++rank;
    }
    return rank;
}

// dim_{F_p} H = dim ker(G) - rank(F), for N = 1 complexes (oracle route).
inline int fp_cohomology_dim(const ZModMatrix& F, const ZModMatrix& G) {
    return G.cols - fp_rank(G) - fp_rank(F);
}

}  // namespace prism
