#pragma once
// Windowed cochain complexes of free Z/p^N-modules and the three compared
// cohomologies: the Cech-Alexander column, the de Rham row, and the
// totalization of the mixed bicomplex.
//
// Basis elements are  T^e (x) X^[k] (x) module-basis (x) form-monomial,
// with |e_axis| <= W (Laurent window) and pd weight = |k| + #(dX symbols)
// <= B (pd window).  Every differential in the supported instances shifts T
// monotonically downward and pd weight monotonically upward, so the window is
// a genuine quotient of a subcomplex: terms leaving below / above the pd bound
// are dropped exactly, while an upward T escape with nonzero coefficient
// raises WindowTooSmall.  d o d = 0 is asserted on every build.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prism/cosimplicial.hpp"
#include "prism/crystals.hpp"
#include "prism/zmod.hpp"

namespace prism {

struct WindowParams {
    int t_window = 3;  // W: Laurent exponents in [-W, W]
    int pd_bound = 6;  // B: pd weight cap
    int depth = 2;     // K: cosimplicial truncation depth
    int qmax = 3;      // highest total degree built
};

struct BasisElem {
    int level = 0;                // cosimplicial level m (0 for pure de Rham)
    std::vector<int> texp;        // Laurent exponents, length d
    std::vector<int> pdexp;       // pd exponents (level-dependent arity)
    int mod_idx = 0;              // module basis index
    std::uint32_t formmask = 0;   // wedge monomial over the level's symbols

    auto key() const { return std::tie(level, formmask, mod_idx, pdexp, texp); }
    bool operator<(const BasisElem& o) const { return key() < o.key(); }
};

struct BuiltComplex {
    long p = 2;
    int N = 1;
    std::vector<std::vector<BasisElem>> bases;  // per total degree
    std::vector<ZModMatrix> d;                  // d[i] : degree i -> i+1
    bool truncated = false;                     // pd-window drops occurred

    int dim(int q) const { return static_cast<int>(bases[static_cast<size_t>(q)].size()); }
};

// Elementary divisor exponents of H^q.
inline std::vector<int> cohomology_ranks(const BuiltComplex& C, int q) {
    if (q < 0 || q >= static_cast<int>(C.bases.size()))
        throw ConfigInvalid("cohomology_ranks: degree out of built range");
    ZModMatrix F = (q == 0) ? ZModMatrix(C.dim(0), 0, C.p, C.N)
                            : C.d[static_cast<size_t>(q - 1)];
    ZModMatrix G = (q < static_cast<int>(C.d.size()))
                       ? C.d[static_cast<size_t>(q)]
                       : ZModMatrix(0, C.dim(q), C.p, C.N);
    return cohomology_divisors(F, G);
}

namespace cohom_detail {

// Sign of appending symbol u to the wedge `mask` and sorting it in; 0 if dup.
inline int wedge_insert(std::uint32_t& mask, int u) {
    std::uint32_t bit = 1u << u;
    if (mask & bit) return 0;
    int crossings = __builtin_popcount(mask >> (u + 1));
    mask |= bit;
    return crossings % 2 ? -1 : 1;
}

// Accumulator for one column of a differential.
struct Emitter {
    const std::map<BasisElem, int>* index;  // target-degree index
    std::map<int, long long>* col;
    long long mod = 0;
    int t_window = 0;
    bool* truncated = nullptr;

    void emit(const BasisElem& b, long long coeff) {
        coeff %= mod;
        if (coeff == 0) return;
        for (int e : b.texp) {
            if (e < -t_window) return;  // exact quotient: downward escape drops
            if (e > t_window)
                throw WindowTooSmall("Laurent window escape at exponent " + std::to_string(e));
        }
        auto it = index->find(b);
        if (it == index->end()) {
            // pd-weight overflow (upward, exact quotient) -- anything else is a bug
            if (truncated) *truncated = true;
            return;
        }
        long long w = ((*col)[it->second] + coeff) % mod;
        if (w < 0) w += mod;
        if (w == 0) (*col).erase(it->second);
        else (*col)[it->second] = w;
    }
};

// Scatter a matrix-valued pd polynomial (per-row images of one module basis
// vector) into basis elements at a fixed level/formmask.
inline void scatter_pd(Emitter& em, const PdPoly& f, int level, int mod_idx,
                       std::uint32_t mask, int sign, long long scale) {
    for (const auto& [k, c] : f.terms())
        for (const auto& [e, coef] : c.terms()) {
            BasisElem b;
            b.level = level;
            b.texp = e;
            b.pdexp = k;
            b.mod_idx = mod_idx;
            b.formmask = mask;
            long long cv = static_cast<long long>(mpz_get_si(coef.get_mpz_t()));
            em.emit(b, sign * scale * cv);
        }
}

inline long long coeff_ll(const Int& c, long long mod) {
    Int r = c % Int(static_cast<long>(mod));
    long long v = mpz_get_si(r.get_mpz_t());
    v %= mod;
    if (v < 0) v += mod;
    return v;
}

}  // namespace cohom_detail

// ---------------------------------------------------------------------------
// de Rham complex of a p-connection (d in {1,2}), j-forms on symbols dT_i/p.
// ---------------------------------------------------------------------------
inline BuiltComplex build_de_rham(const PConnection& P, const WindowParams& wp) {
    if (P.d < 1 || P.d > 2) throw ConfigInvalid("build_de_rham: d in {1,2} only");
    const int W = wp.t_window, d = P.d, r = P.r;
    BuiltComplex C;
    C.p = P.ctx.p;
    C.N = P.ctx.prec;
    long long mod = 1;
    for (int i = 0; i < C.N; ++i) mod *= C.p;

    std::vector<std::map<BasisElem, int>> index(static_cast<size_t>(d) + 1);
    std::vector<int> exps;
    for (int e = -W; e <= W; ++e) exps.push_back(e);
    for (int j = 0; j <= d; ++j) {
        std::vector<BasisElem> basis;
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            if (__builtin_popcount(mask) != j) continue;
            for (int m = 0; m < r; ++m) {
                std::vector<std::vector<int>> tv(1, std::vector<int>{});
                for (int ax = 0; ax < d; ++ax) {
                    std::vector<std::vector<int>> nx;
                    for (const auto& pre : tv)
                        for (int e : exps) {
                            auto q = pre;
                            q.push_back(e);
                            nx.push_back(q);
                        }
                    tv = std::move(nx);
                }
                for (auto& te : tv) {
                    BasisElem b;
                    b.texp = te;
                    b.mod_idx = m;
                    b.formmask = mask;
                    index[static_cast<size_t>(j)].emplace(b, static_cast<int>(basis.size()));
                    basis.push_back(b);
                }
            }
        }
        C.bases.push_back(std::move(basis));
    }
    for (int j = 0; j < d; ++j) {
        ZModMatrix D(C.dim(j + 1), C.dim(j), C.p, C.N);
        for (int colidx = 0; colidx < C.dim(j); ++colidx) {
            const BasisElem& src = C.bases[static_cast<size_t>(j)][static_cast<size_t>(colidx)];
            std::map<int, long long> col;
            cohom_detail::Emitter em{&index[static_cast<size_t>(j + 1)], &col, mod, W,
                                     &C.truncated};
            for (int ax = 0; ax < d; ++ax) {
                std::uint32_t mask = src.formmask;
                int sgn = cohom_detail::wedge_insert(mask, ax);
                if (sgn == 0) continue;
                // p * d/dT_ax
                int e = src.texp[static_cast<size_t>(ax)];
                if (e != 0) {
                    BasisElem b = src;
                    b.formmask = mask;
                    b.texp[static_cast<size_t>(ax)] -= 1;
                    em.emit(b, static_cast<long long>(sgn) * C.p * e);
                }
                // -phi_ax acting on the module index
                for (int row = 0; row < r; ++row) {
                    const LaurentPoly& ent =
                        P.phi[static_cast<size_t>(ax)][static_cast<size_t>(row)]
                             [static_cast<size_t>(src.mod_idx)];
                    for (const auto& [me, c] : ent.terms()) {
                        BasisElem b = src;
                        b.formmask = mask;
                        b.mod_idx = row;
                        for (int t = 0; t < d; ++t) b.texp[static_cast<size_t>(t)] += me[static_cast<size_t>(t)];
                        em.emit(b, -sgn * cohom_detail::coeff_ll(c, mod));
                    }
                }
            }
            for (const auto& [rowi, v] : col) D.at(rowi, colidx) = v;
        }
        C.d.push_back(std::move(D));
    }
    return C;
}

// ---------------------------------------------------------------------------
// Shared machinery for the Cech-Alexander column and the bicomplex.
// ---------------------------------------------------------------------------
namespace cohom_detail {

// pd weight including dX symbols (symbols 0..d-1 are dT/p, weight 0).
inline int pd_weight(const BasisElem& b, int d) {
    int w = 0;
    for (int k : b.pdexp) w += k;
    for (int s = d; s < 32; ++s)
        if (b.formmask & (1u << s)) ++w;
    return w;
}

// enumerate wedge masks over nsym symbols with exactly j bits
inline std::vector<std::uint32_t> masks_of_size(int nsym, int j) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << nsym); ++m)
        if (__builtin_popcount(m) == j) out.push_back(m);
    return out;
}

struct LevelBasisSpec {
    int level, d, r, W, B;
    int npd() const { return level * d; }
    int nsym() const { return d + level * d; }  // dT_1..dT_d, dX_{1,1}..dX_{m,d}
};

inline std::vector<BasisElem> make_level_basis(const LevelBasisSpec& s, int j) {
    std::vector<BasisElem> out;
    auto pds = multis_up_to(s.npd(), s.B);
    std::vector<std::vector<int>> tv(1, std::vector<int>{});
    for (int ax = 0; ax < s.d; ++ax) {
        std::vector<std::vector<int>> nx;
        for (const auto& pre : tv)
            for (int e = -s.W; e <= s.W; ++e) {
                auto q = pre;
                q.push_back(e);
                nx.push_back(q);
            }
        tv = std::move(nx);
    }
    for (std::uint32_t mask : masks_of_size(s.nsym(), j))
        for (int m = 0; m < s.r; ++m)
            for (const auto& k : pds)
                for (const auto& te : tv) {
                    BasisElem b;
                    b.level = s.level;
                    b.texp = te;
                    b.pdexp = k;
                    b.mod_idx = m;
                    b.formmask = mask;
                    if (pd_weight(b, s.d) > s.B) continue;
                    out.push_back(b);
                }
    return out;
}

// Face image of the ring part T^e X^[k] under p_i : level m -> m+1.
inline PdPoly face_ring_image(const CosimplicialSpec& cs, int m, int i, const BasisElem& src) {
    PdPoly mono = PdPoly::zero(cs.ctx, cs.d, level_npd(cs, m), cs.bound);
    LaurentPoly c(cs.ctx, cs.d);
    c.add_term(src.texp, 1);
    PdPoly::PdExp k(src.pdexp.begin(), src.pdexp.end());
    mono.add_term(k, c);
    return pd_substitute(mono, face_map(cs, m, i));
}

// Face image of a form symbol: list of (sign, new symbol index).
// Symbols: s < d: dT_s/p; s >= d: dX_{j,r} with j = (s-d)/d + 1, r = (s-d)%d.
inline std::vector<std::pair<int, int>> face_symbol_image(int d, int i, int s) {
    auto dX = [&](int j, int r) { return d + (j - 1) * d + r; };
    std::vector<std::pair<int, int>> out;
    if (s < d) {
        out.push_back({+1, s});
        if (i == 0) out.push_back({-1, dX(1, s)});
        return out;
    }
    int j = (s - d) / d + 1, r = (s - d) % d;
    int fj = (i == 0) ? j + 1 : (j < i ? j : j + 1);
    out.push_back({+1, dX(fj, r)});
    if (i == 0) out.push_back({-1, dX(1, r)});
    return out;
}

}  // namespace cohom_detail

// ---------------------------------------------------------------------------
// Cech-Alexander column: levels m = 0..K of  M (x) R^m, d_1 = sum (-1)^i p_i,
// with p_0 twisted through the stratification eps on the module factor.
// ---------------------------------------------------------------------------
inline BuiltComplex build_cech_alexander(const Stratification& S, const WindowParams& wp) {
    const int d = S.d, r = S.r, W = wp.t_window, B = wp.pd_bound, K = wp.depth;
    BuiltComplex C;
    C.p = S.ctx.p;
    C.N = S.ctx.prec;
    long long mod = 1;
    for (int i = 0; i < C.N; ++i) mod *= C.p;
    CosimplicialSpec cs{Flavor::Plain, S.ctx, d, B, 1};

    std::vector<std::map<BasisElem, int>> index(static_cast<size_t>(K) + 1);
    for (int m = 0; m <= K; ++m) {
        cohom_detail::LevelBasisSpec ls{m, d, r, W, B};
        auto basis = cohom_detail::make_level_basis(ls, 0);
        for (size_t i = 0; i < basis.size(); ++i)
            index[static_cast<size_t>(m)].emplace(basis[i], static_cast<int>(i));
        C.bases.push_back(std::move(basis));
    }
    for (int m = 0; m < K; ++m) {
        ZModMatrix D(C.dim(m + 1), C.dim(m), C.p, C.N);
        for (int colidx = 0; colidx < C.dim(m); ++colidx) {
            const BasisElem& src = C.bases[static_cast<size_t>(m)][static_cast<size_t>(colidx)];
            std::map<int, long long> col;
            cohom_detail::Emitter em{&index[static_cast<size_t>(m + 1)], &col, mod, W,
                                     &C.truncated};
            for (int i = 0; i <= m + 1; ++i) {
                int sgn = (i % 2) ? -1 : 1;
                PdPoly ring = cohom_detail::face_ring_image(cs, m, i, src);
                if (i != 0) {
                    cohom_detail::scatter_pd(em, ring, m + 1, src.mod_idx, 0, sgn, 1);
                    continue;
                }
                // p_0: module factor twisted by eps = sum theta_h X_1^[h]
                for (const auto& [h, th] : S.theta) {
                    PdPoly xh = PdPoly::zero(S.ctx, d, level_npd(cs, m + 1), B);
                    PdPoly::PdExp he(static_cast<size_t>(level_npd(cs, m + 1)), 0);
                    for (int ax = 0; ax < d; ++ax) he[static_cast<size_t>(ax)] = h[static_cast<size_t>(ax)];
                    xh.add_term(he, LaurentPoly::one(S.ctx, d));
                    PdPoly tw = ring * xh;
                    for (int row = 0; row < r; ++row) {
                        const LaurentPoly& ent = th[static_cast<size_t>(row)]
                                                   [static_cast<size_t>(src.mod_idx)];
                        if (ent.is_zero()) continue;
                        cohom_detail::scatter_pd(em, tw.times_laurent(ent), m + 1, row, 0, sgn,
                                                 1);
                    }
                }
            }
            for (const auto& [rowi, v] : col) D.at(rowi, colidx) = v;
        }
        C.d.push_back(std::move(D));
    }
    return C;
}

// ---------------------------------------------------------------------------
// Totalization of the bicomplex (m, j) |-> M (x) R^m (x) Omega^j, with
// d = d_1 + (-1)^m d_2, d_1 the twisted face alternation acting on functions
// and forms, d_2 = nabla /\ + d_R the levelwise de Rham differential.
// ---------------------------------------------------------------------------
inline BuiltComplex build_totalization(const Stratification& S, const WindowParams& wp) {
    const int d = S.d, r = S.r, W = wp.t_window, B = wp.pd_bound, K = wp.depth;
    const int qmax = wp.qmax;
    BuiltComplex C;
    C.p = S.ctx.p;
    C.N = S.ctx.prec;
    long long mod = 1;
    for (int i = 0; i < C.N; ++i) mod *= C.p;
    CosimplicialSpec cs{Flavor::Plain, S.ctx, d, B, 1};

    // theta_{e_i} = phi_i for the nabla-part of d_2
    std::vector<Mat> phi;
    for (int i = 0; i < d; ++i) {
        std::vector<int> e(static_cast<size_t>(d), 0);
        e[static_cast<size_t>(i)] = 1;
        auto it = S.theta.find(e);
        phi.push_back(it == S.theta.end() ? mat_zero(S.ctx, d, r) : it->second);
    }

    std::vector<std::map<BasisElem, int>> index(static_cast<size_t>(qmax) + 1);
    for (int q = 0; q <= qmax; ++q) {
        std::vector<BasisElem> basis;
        for (int m = 0; m <= std::min(q, K); ++m) {
            int j = q - m;
            if (j > d * (1 + m)) continue;
            cohom_detail::LevelBasisSpec ls{m, d, r, W, B};
            for (auto& b : cohom_detail::make_level_basis(ls, j)) basis.push_back(b);
        }
        for (size_t i = 0; i < basis.size(); ++i)
            index[static_cast<size_t>(q)].emplace(basis[i], static_cast<int>(i));
        C.bases.push_back(std::move(basis));
    }

    for (int q = 0; q < qmax; ++q) {
        ZModMatrix D(C.dim(q + 1), C.dim(q), C.p, C.N);
        for (int colidx = 0; colidx < C.dim(q); ++colidx) {
            const BasisElem& src = C.bases[static_cast<size_t>(q)][static_cast<size_t>(colidx)];
            std::map<int, long long> col;
            cohom_detail::Emitter em{&index[static_cast<size_t>(q + 1)], &col, mod, W,
                                     &C.truncated};
            const int m = src.level;
            const int nsym_src = d + m * d;

            // ---- d_1: faces level m -> m+1, functions and forms ----
            if (m + 1 <= K) {
                for (int i = 0; i <= m + 1; ++i) {
                    int base_sgn = (i % 2) ? -1 : 1;
                    PdPoly ring = cohom_detail::face_ring_image(cs, m, i, src);
                    // wedge image of the form monomial
                    std::vector<std::pair<std::uint32_t, int>> wedges{{0u, 1}};
                    for (int s = 0; s < nsym_src; ++s) {
                        if (!(src.formmask & (1u << s))) continue;
                        auto imgs = cohom_detail::face_symbol_image(d, i, s);
                        std::vector<std::pair<std::uint32_t, int>> nx;
                        for (const auto& [wm, wsgn] : wedges)
                            for (const auto& [usgn, u] : imgs) {
                                std::uint32_t m2 = wm;
                                std::uint32_t bit = 1u << u;
                                if (m2 & bit) continue;
                                int cross = __builtin_popcount(m2 >> (u + 1));
                                m2 |= bit;
                                nx.push_back({m2, wsgn * usgn * (cross % 2 ? -1 : 1)});
                            }
                        wedges = std::move(nx);
                    }
                    for (const auto& [wmask, wsgn] : wedges) {
                        if (i != 0) {
                            cohom_detail::scatter_pd(em, ring, m + 1, src.mod_idx, wmask,
                                                     base_sgn * wsgn, 1);
                            continue;
                        }
                        for (const auto& [h, th] : S.theta) {
                            PdPoly xh =
                                PdPoly::zero(S.ctx, d, level_npd(cs, m + 1), B);
                            PdPoly::PdExp he(static_cast<size_t>(level_npd(cs, m + 1)), 0);
                            for (int ax = 0; ax < d; ++ax)
                                he[static_cast<size_t>(ax)] = h[static_cast<size_t>(ax)];
                            xh.add_term(he, LaurentPoly::one(S.ctx, d));
                            PdPoly tw = ring * xh;
                            for (int row = 0; row < r; ++row) {
                                const LaurentPoly& ent = th[static_cast<size_t>(row)]
                                                           [static_cast<size_t>(src.mod_idx)];
                                if (ent.is_zero()) continue;
                                cohom_detail::scatter_pd(em, tw.times_laurent(ent), m + 1, row,
                                                         wmask, base_sgn * wsgn, 1);
                            }
                        }
                    }
                }
            }

            // ---- (-1)^m d_2: nabla /\ + d_R at level m ----
            int msgn = (m % 2) ? -1 : 1;
            // nabla part: -phi_ax with dT_ax inserted
            for (int ax = 0; ax < d; ++ax) {
                std::uint32_t mask = src.formmask;
                int sgn = cohom_detail::wedge_insert(mask, ax);
                if (sgn == 0) continue;
                for (int row = 0; row < r; ++row) {
                    const LaurentPoly& ent =
                        phi[static_cast<size_t>(ax)][static_cast<size_t>(row)]
                           [static_cast<size_t>(src.mod_idx)];
                    for (const auto& [me, c] : ent.terms()) {
                        BasisElem b = src;
                        b.formmask = mask;
                        b.mod_idx = row;
                        for (int t = 0; t < d; ++t)
                            b.texp[static_cast<size_t>(t)] += me[static_cast<size_t>(t)];
                        em.emit(b, -msgn * sgn * cohom_detail::coeff_ll(c, mod));
                    }
                }
                // d_R function part: p * d/dT_ax
                int e = src.texp[static_cast<size_t>(ax)];
                if (e != 0) {
                    BasisElem b = src;
                    b.formmask = mask;
                    b.texp[static_cast<size_t>(ax)] -= 1;
                    em.emit(b, static_cast<long long>(msgn) * sgn * C.p * e);
                }
            }
            // d_R pd part: d/dX_{s} with dX_s inserted
            for (int pv = 0; pv < m * d; ++pv) {
                if (src.pdexp[static_cast<size_t>(pv)] == 0) continue;
                int sym = d + pv;
                std::uint32_t mask = src.formmask;
                int sgn = cohom_detail::wedge_insert(mask, sym);
                if (sgn == 0) continue;
                BasisElem b = src;
                b.formmask = mask;
                b.pdexp[static_cast<size_t>(pv)] -= 1;
                em.emit(b, msgn * sgn);
            }

            for (const auto& [rowi, v] : col) D.at(rowi, colidx) = v;
        }
        C.d.push_back(std::move(D));
    }
    return C;
}

// ---------------------------------------------------------------------------
// Sigma de Rham complex (h charts): symbols dT^{(t)}_r/p, t = 0..h-1; pd
// variables Y_{k,r}, k = 1..h-1.  All symbols carry pd weight 1 here.
// ---------------------------------------------------------------------------
inline BuiltComplex build_sigma_de_rham(const SigmaConnection& SC, const WindowParams& wp) {
    const int d = SC.d, r = SC.r, h = SC.h, W = wp.t_window, B = wp.pd_bound;
    const int npd = (h - 1) * d, nsym = h * d;
    BuiltComplex C;
    C.p = SC.ctx.p;
    C.N = SC.ctx.prec;
    long long mod = 1;
    for (int i = 0; i < C.N; ++i) mod *= C.p;

    auto weight = [&](const BasisElem& b) {
        int w = 0;
        for (int k : b.pdexp) w += k;
        w += __builtin_popcount(b.formmask);
        return w;
    };
    int jmax = std::min(nsym, wp.qmax);
    std::vector<std::map<BasisElem, int>> index(static_cast<size_t>(jmax) + 1);
    for (int j = 0; j <= jmax; ++j) {
        std::vector<BasisElem> basis;
        auto pds = multis_up_to(npd, B);
        for (std::uint32_t mask : cohom_detail::masks_of_size(nsym, j))
            for (int m = 0; m < r; ++m)
                for (const auto& k : pds) {
                    std::vector<std::vector<int>> tv(1, std::vector<int>{});
                    for (int ax = 0; ax < d; ++ax) {
                        std::vector<std::vector<int>> nx;
                        for (const auto& pre : tv)
                            for (int e = -W; e <= W; ++e) {
                                auto q2 = pre;
                                q2.push_back(e);
                                nx.push_back(q2);
                            }
                        tv = std::move(nx);
                    }
                    for (auto& te : tv) {
                        BasisElem b;
                        b.texp = te;
                        b.pdexp = k;
                        b.mod_idx = m;
                        b.formmask = mask;
                        if (weight(b) > B) continue;
                        basis.push_back(b);
                    }
                }
        for (size_t i = 0; i < basis.size(); ++i)
            index[static_cast<size_t>(j)].emplace(basis[i], static_cast<int>(i));
        C.bases.push_back(std::move(basis));
    }
    auto yvar = [&](int k, int ax) { return (k - 1) * d + ax; };  // k = 1..h-1
    for (int j = 0; j < jmax; ++j) {
        ZModMatrix D(C.dim(j + 1), C.dim(j), C.p, C.N);
        for (int colidx = 0; colidx < C.dim(j); ++colidx) {
            const BasisElem& src = C.bases[static_cast<size_t>(j)][static_cast<size_t>(colidx)];
            std::map<int, long long> col;
            cohom_detail::Emitter em{&index[static_cast<size_t>(j + 1)], &col, mod, W,
                                     &C.truncated};
            for (int t = 0; t < h; ++t)
                for (int ax = 0; ax < d; ++ax) {
                    int sym = t * d + ax;
                    std::uint32_t mask = src.formmask;
                    int sgn = cohom_detail::wedge_insert(mask, sym);
                    if (sgn == 0) continue;
                    // -phi^{(t)}_ax on the module factor
                    for (int row = 0; row < r; ++row) {
                        const LaurentPoly& ent =
                            SC.phi[static_cast<size_t>(t)][static_cast<size_t>(ax)]
                                  [static_cast<size_t>(row)][static_cast<size_t>(src.mod_idx)];
                        for (const auto& [me, c] : ent.terms()) {
                            BasisElem b = src;
                            b.formmask = mask;
                            b.mod_idx = row;
                            for (int u = 0; u < d; ++u)
                                b.texp[static_cast<size_t>(u)] += me[static_cast<size_t>(u)];
                            em.emit(b, -sgn * cohom_detail::coeff_ll(c, mod));
                        }
                    }
                    if (t == 0) {
                        // p d/dT_ax
                        int e = src.texp[static_cast<size_t>(ax)];
                        if (e != 0) {
                            BasisElem b = src;
                            b.formmask = mask;
                            b.texp[static_cast<size_t>(ax)] -= 1;
                            em.emit(b, static_cast<long long>(sgn) * C.p * e);
                        }
                        // + sum_k d/dY_{k,ax}
                        for (int k = 1; k <= h - 1; ++k) {
                            int pv = yvar(k, ax);
                            if (src.pdexp[static_cast<size_t>(pv)] == 0) continue;
                            BasisElem b = src;
                            b.formmask = mask;
                            b.pdexp[static_cast<size_t>(pv)] -= 1;
                            em.emit(b, sgn);
                        }
                    } else {
                        // - d/dY_{t,ax}
                        int pv = yvar(t, ax);
                        if (src.pdexp[static_cast<size_t>(pv)] != 0) {
                            BasisElem b = src;
                            b.formmask = mask;
                            b.pdexp[static_cast<size_t>(pv)] -= 1;
                            em.emit(b, -sgn);
                        }
                    }
                }
            for (const auto& [rowi, v] : col) D.at(rowi, colidx) = v;
        }
        C.d.push_back(std::move(D));
    }
    return C;
}

// d o d = 0, asserted on every constructed complex.
inline void assert_complex(const BuiltComplex& C) {
    for (size_t i = 0; i + 1 < C.d.size(); ++i) {
        const ZModMatrix& A = C.d[i + 1];
        const ZModMatrix& B = C.d[i];
        for (int r2 = 0; r2 < A.rows; ++r2)
            for (int c2 = 0; c2 < B.cols; ++c2) {
                long long s = 0;
                for (int k = 0; k < A.cols; ++k)
                    s = (s + A.at(r2, k) * B.at(k, c2)) % A.mod;
                if (s % A.mod != 0)
                    throw IdentityViolated("d o d != 0 in a built complex");
            }
    }
}

// ---------------------------------------------------------------------------
// Comparison of the three cohomologies with the stability gate.
// ---------------------------------------------------------------------------
struct CompareResult {
    std::vector<int> h0_ca, h0_tot, h0_dr;
    std::vector<int> h1_ca, h1_tot, h1_dr;
    bool equal0 = false, equal1 = false, stable = false;
};

inline CompareResult compare_rho_at(const Stratification& S, const PConnection& P,
                                    const WindowParams& wp) {
    BuiltComplex CA = build_cech_alexander(S, wp);
    BuiltComplex TOT = build_totalization(S, wp);
    BuiltComplex DR = build_de_rham(P, wp);
    assert_complex(CA);
    assert_complex(TOT);
    assert_complex(DR);
    CompareResult r;
    r.h0_ca = cohomology_ranks(CA, 0);
    r.h1_ca = cohomology_ranks(CA, 1);
    r.h0_tot = cohomology_ranks(TOT, 0);
    r.h1_tot = cohomology_ranks(TOT, 1);
    r.h0_dr = cohomology_ranks(DR, 0);
    r.h1_dr = cohomology_ranks(DR, 1);
    r.equal0 = (r.h0_ca == r.h0_tot) && (r.h0_tot == r.h0_dr);
    r.equal1 = (r.h1_ca == r.h1_tot) && (r.h1_tot == r.h1_dr);
    return r;
}

// Stability gate: the verdict must agree between (B, W) and (B + p, W + 2);
// otherwise Inconclusive.
inline CompareResult compare_rho(const Stratification& S, const PConnection& P,
                                 const WindowParams& wp) {
    CompareResult a = compare_rho_at(S, P, wp);
    WindowParams wp2 = wp;
    wp2.pd_bound += static_cast<int>(S.ctx.p);
    wp2.t_window += 2;
    CompareResult b = compare_rho_at(S, P, wp2);
    if (a.equal0 != b.equal0 || a.equal1 != b.equal1)
        throw Inconclusive("compare_rho: verdict unstable under window enlargement");
    a.stable = true;
    return a;
}

struct SigmaCompareResult {
    std::vector<int> h0_dr, h0_sigma, h1_dr, h1_sigma;
    bool equal0 = false, equal1 = false, stable = false;
};

inline SigmaCompareResult sigma_compare_at(const PConnection& P, const SigmaConnection& SC,
                                           const WindowParams& wp) {
    BuiltComplex DR = build_de_rham(P, wp);
    BuiltComplex SDR = build_sigma_de_rham(SC, wp);
    assert_complex(DR);
    assert_complex(SDR);
    SigmaCompareResult r;
    r.h0_dr = cohomology_ranks(DR, 0);
    r.h1_dr = cohomology_ranks(DR, 1);
    r.h0_sigma = cohomology_ranks(SDR, 0);
    r.h1_sigma = cohomology_ranks(SDR, 1);
    r.equal0 = r.h0_dr == r.h0_sigma;
    r.equal1 = r.h1_dr == r.h1_sigma;
    return r;
}

inline SigmaCompareResult sigma_compare(const PConnection& P, const SigmaConnection& SC,
                                        const WindowParams& wp) {
    SigmaCompareResult a = sigma_compare_at(P, SC, wp);
    WindowParams wp2 = wp;
    wp2.pd_bound += static_cast<int>(P.ctx.p);
    wp2.t_window += 2;
    SigmaCompareResult b = sigma_compare_at(P, SC, wp2);
    if (a.equal0 != b.equal0 || a.equal1 != b.equal1)
        throw Inconclusive("sigma_compare: verdict unstable under window enlargement");
    a.stable = true;
    return a;
}

}  // namespace prism
