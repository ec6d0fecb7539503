#pragma once
// Cosimplicial pd-rings, three flavors:
//
//   Plain:  R^m   = R < X_{j,r} : 1<=j<=m >            (Cech-Alexander levels)
//   Tilde:  R~^m  = R < Y_r, Z_{j,r} : 1<=j<=m >       (envelope-relative levels)
//   Sigma:  R_S^m = R < Y_{k,r} (k<h), X^{(t)}_{j,r} (t<=h, j<=m) >
//
// Face maps p_i : level m -> m+1 and degeneracies s_i : level m -> m-1 are
// given on generators (all pd images are signed sums of pd variables; the only
// nontrivial Laurent image is p_0(T_r) = T_r - p X_{1,r}).  The simplicial
// identities are verified on generators to a requested depth.

#include <string>
#include <vector>

#include "prism/pd.hpp"
#include "prism/textio.hpp"

namespace prism {

enum class Flavor { Plain, Tilde, Sigma };

struct CosimplicialSpec {
    Flavor flavor = Flavor::Plain;
    Context ctx;
    int d = 1;      // Laurent variables per level
    int bound = 6;  // pd bound of every level
    int h = 1;      // Sigma only: number of charts
};

// Number of pd variables at level m.
inline int level_npd(const CosimplicialSpec& s, int m) {
    switch (s.flavor) {
        case Flavor::Plain: return m * s.d;
        case Flavor::Tilde: return s.d + m * s.d;
        case Flavor::Sigma: return (s.h - 1) * s.d + s.h * m * s.d;
    }
    return 0;
}

// pd variable index bookkeeping ---------------------------------------------
// Plain:  X_{j,r}           -> (j-1)*d + r
// Tilde:  Y_r -> r;  Z_{j,r} -> d + (j-1)*d + r
// Sigma:  Y_{k,r} -> (k-1)*d + r;  X^{(t)}_{j,r} -> (h-1)*d + ((t-1)*m + (j-1))*d + r

inline int plain_X(const CosimplicialSpec& s, int j, int r) { return (j - 1) * s.d + r; }
inline int tilde_Y(const CosimplicialSpec& s, int r) { (void)s; return r; }
inline int tilde_Z(const CosimplicialSpec& s, int j, int r) { return s.d + (j - 1) * s.d + r; }
inline int sigma_Y(const CosimplicialSpec& s, int k, int r) { return (k - 1) * s.d + r; }
inline int sigma_X(const CosimplicialSpec& s, int m, int t, int j, int r) {
    return (s.h - 1) * s.d + ((t - 1) * m + (j - 1)) * s.d + r;
}

inline VarTable level_vars(const CosimplicialSpec& s, int m) {
    VarTable v;
    for (int r = 1; r <= s.d; ++r)
        v.laurent.push_back(s.d == 1 ? "T" : "T" + std::to_string(r));
    auto nm = [&](const std::string& base, int j, int r) {
        std::string n = base + std::to_string(j);
        if (s.d > 1) n += "_" + std::to_string(r);
        return n;
    };
    switch (s.flavor) {
        case Flavor::Plain:
            for (int j = 1; j <= m; ++j)
                for (int r = 1; r <= s.d; ++r) v.pd.push_back(nm("X", j, r));
            break;
        case Flavor::Tilde:
            for (int r = 1; r <= s.d; ++r)
                v.pd.push_back(s.d == 1 ? "Y" : "Y" + std::to_string(r));
            for (int j = 1; j <= m; ++j)
                for (int r = 1; r <= s.d; ++r) v.pd.push_back(nm("Z", j, r));
            break;
        case Flavor::Sigma:
            for (int k = 1; k <= s.h - 1; ++k)
                for (int r = 1; r <= s.d; ++r) v.pd.push_back(nm("Y", k, r));
            for (int t = 1; t <= s.h; ++t)
                for (int j = 1; j <= m; ++j)
                    for (int r = 1; r <= s.d; ++r)
                        v.pd.push_back(nm("X(" + std::to_string(t) + ")", j, r));
            break;
    }
    return v;
}

namespace cosimp_detail {

using Summands = std::vector<std::pair<int, int>>;

inline PdSubstitution base_subst(const CosimplicialSpec& s, int target_m) {
    PdSubstitution sub;
    sub.tctx = s.ctx;
    sub.td = s.d;
    sub.tnpd = level_npd(s, target_m);
    sub.tbound = s.bound;
    return sub;
}

// p_0(T_r) = T_r - p X_{first,r}; other faces and all degeneracies fix T.
inline PdPoly T_image(const CosimplicialSpec& s, int target_m, int r, int xvar) {
    PdPoly t = PdPoly::from_laurent(LaurentPoly::monomial(s.ctx, s.d, r, 1),
                                    level_npd(s, target_m), s.bound);
    if (xvar >= 0)
        t = t - PdPoly::pd_monomial(s.ctx, s.d, level_npd(s, target_m), s.bound, xvar, 1)
                    .scaled(s.ctx.p);
    return t;
}

}  // namespace cosimp_detail

// Face map p_i : level m -> level m+1 as a substitution on generators.
inline PdSubstitution face_map(const CosimplicialSpec& s, int m, int i) {
    using cosimp_detail::Summands;
    if (i < 0 || i > m + 1) throw ConfigInvalid("face_map: index out of range");
    PdSubstitution sub = cosimp_detail::base_subst(s, m + 1);
    // Laurent images
    for (int r = 0; r < s.d; ++r) {
        int xv = -1;
        if (i == 0) {
            switch (s.flavor) {
                case Flavor::Plain: xv = plain_X(s, 1, r); break;
                case Flavor::Tilde: xv = -1; break;  // R_1-linear: T fixed
                case Flavor::Sigma: xv = sigma_X(s, m + 1, 1, 1, r); break;
            }
        }
        sub.laurent_images.push_back(cosimp_detail::T_image(s, m + 1, r, xv));
    }
    // pd images
    auto X_face = [&](auto Xof, int j, int r) -> Summands {
        // the shared pattern: p_0(X_j) = X_{j+1} - X_1, p_i(X_j) = X_{j+1} (0<i<=j), X_j (i>j)
        if (i == 0) return Summands{{+1, Xof(j + 1, r)}, {-1, Xof(1, r)}};
        if (i <= j) return Summands{{+1, Xof(j + 1, r)}};
        return Summands{{+1, Xof(j, r)}};
    };
    switch (s.flavor) {
        case Flavor::Plain:
            for (int j = 1; j <= m; ++j)
                for (int r = 0; r < s.d; ++r)
                    sub.pd_images.push_back(
                        {X_face([&](int jj, int rr) { return plain_X(s, jj, rr); }, j, r)});
            break;
        case Flavor::Tilde:
            for (int r = 0; r < s.d; ++r) {
                Summands y{{+1, tilde_Y(s, r)}};
                if (i == 0) y.push_back({+1, tilde_Z(s, 1, r)});
                sub.pd_images.push_back({y});
            }
            for (int j = 1; j <= m; ++j)
                for (int r = 0; r < s.d; ++r)
                    sub.pd_images.push_back(
                        {X_face([&](int jj, int rr) { return tilde_Z(s, jj, rr); }, j, r)});
            break;
        case Flavor::Sigma:
            for (int k = 1; k <= s.h - 1; ++k)
                for (int r = 0; r < s.d; ++r) {
                    Summands y{{+1, sigma_Y(s, k, r)}};
                    if (i == 0) {
                        y.push_back({-1, sigma_X(s, m + 1, 1, 1, r)});
                        y.push_back({+1, sigma_X(s, m + 1, k + 1, 1, r)});
                    }
                    sub.pd_images.push_back({y});
                }
            for (int t = 1; t <= s.h; ++t)
                for (int j = 1; j <= m; ++j)
                    for (int r = 0; r < s.d; ++r)
                        sub.pd_images.push_back({X_face(
                            [&](int jj, int rr) { return sigma_X(s, m + 1, t, jj, rr); }, j,
                            r)});
            break;
    }
    return sub;
}

// Degeneracy s_i : level m -> level m-1 (0 <= i <= m-1).
inline PdSubstitution degeneracy_map(const CosimplicialSpec& s, int m, int i) {
    using cosimp_detail::Summands;
    if (i < 0 || i > m - 1) throw ConfigInvalid("degeneracy_map: index out of range");
    PdSubstitution sub = cosimp_detail::base_subst(s, m - 1);
    for (int r = 0; r < s.d; ++r)
        sub.laurent_images.push_back(cosimp_detail::T_image(s, m - 1, r, -1));
    auto X_deg = [&](auto Xof, int j, int r) -> Summands {
        // s_0(X_1) = 0; s_i(X_j) = X_{j-1} (i < j, (i,j) != (0,1)); X_j (i >= j)
        if (i == 0 && j == 1) return Summands{};
        if (i < j) return Summands{{+1, Xof(j - 1, r)}};
        return Summands{{+1, Xof(j, r)}};
    };
    switch (s.flavor) {
        case Flavor::Plain:
            for (int j = 1; j <= m; ++j)
                for (int r = 0; r < s.d; ++r)
                    sub.pd_images.push_back(
                        {X_deg([&](int jj, int rr) { return plain_X(s, jj, rr); }, j, r)});
            break;
        case Flavor::Tilde:
            for (int r = 0; r < s.d; ++r)
                sub.pd_images.push_back({Summands{{+1, tilde_Y(s, r)}}});
            for (int j = 1; j <= m; ++j)
                for (int r = 0; r < s.d; ++r)
                    sub.pd_images.push_back(
                        {X_deg([&](int jj, int rr) { return tilde_Z(s, jj, rr); }, j, r)});
            break;
        case Flavor::Sigma:
            for (int k = 1; k <= s.h - 1; ++k)
                for (int r = 0; r < s.d; ++r)
                    sub.pd_images.push_back({Summands{{+1, sigma_Y(s, k, r)}}});
            for (int t = 1; t <= s.h; ++t)
                for (int j = 1; j <= m; ++j)
                    for (int r = 0; r < s.d; ++r)
                        sub.pd_images.push_back({X_deg(
                            [&](int jj, int rr) { return sigma_X(s, m - 1, t, jj, rr); }, j,
                            r)});
            break;
    }
    return sub;
}

// All ring generators of level m, as pd polynomials.
inline std::vector<PdPoly> level_generators(const CosimplicialSpec& s, int m) {
    std::vector<PdPoly> g;
    int npd = level_npd(s, m);
    for (int r = 0; r < s.d; ++r)
        g.push_back(PdPoly::from_laurent(LaurentPoly::monomial(s.ctx, s.d, r, 1), npd, s.bound));
    for (int j = 0; j < npd; ++j)
        g.push_back(PdPoly::pd_monomial(s.ctx, s.d, npd, s.bound, j, 1));
    return g;
}

// Verify the simplicial identities on generators up to level `depth`:
//   p_i p_j = p_{j+1} p_i               (i <= j;  composites level m -> m+2)
//   s_j p_i = p_i s_{j-1}  (i < j),  id (i = j, j+1),  p_{i-1} s_j  (i > j+1)
//   s_j s_i = s_i s_{j+1}               (i <= j;  composites level m+2 -> m)
// Throws IdentityViolated on the first failure.
inline void verify_cosimplicial_identities(const CosimplicialSpec& s, int depth) {
    auto apply2 = [&](const PdPoly& g, const PdSubstitution& first,
                      const PdSubstitution& second) {
        return pd_substitute(pd_substitute(g, first), second);
    };
    auto fail = [&](const std::string& what, int m, int i, int j) {
        throw IdentityViolated("cosimplicial " + what + " at level " + std::to_string(m) +
                               ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
    };
    for (int m = 0; m <= depth; ++m) {
        auto gens = level_generators(s, m);
        // face-face (need m+2 within reach)
        if (m + 2 <= depth + 2)
            for (int j = 0; j <= m + 1; ++j)
                for (int i = 0; i <= j; ++i)
                    for (const auto& g : gens) {
                        PdPoly a = apply2(g, face_map(s, m, j), face_map(s, m + 1, i));
                        PdPoly b = apply2(g, face_map(s, m, i), face_map(s, m + 1, j + 1));
                        if (!a.equals_mod(b)) fail("face-face identity", m, i, j);
                    }
        // degeneracy-face: s_j (level m+1 -> m) after p_i (level m -> m+1)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= m + 1; ++i)
                for (const auto& g : gens) {
                    PdPoly lhs = apply2(g, face_map(s, m, i), degeneracy_map(s, m + 1, j));
                    PdPoly rhs;
                    if (i == j || i == j + 1) rhs = g;
                    else if (i < j)
                        rhs = apply2(g, degeneracy_map(s, m, j - 1), face_map(s, m - 1, i));
                    else
                        rhs = apply2(g, degeneracy_map(s, m, j), face_map(s, m - 1, i - 1));
                    if (!lhs.equals_mod(rhs)) fail("degeneracy-face identity", m, i, j);
                }
        // degeneracy-degeneracy at level m+2
        if (m + 2 <= depth + 2) {
            auto gens2 = level_generators(s, m + 2);
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i <= j; ++i)
                    for (const auto& g : gens2) {
                        PdPoly a =
                            apply2(g, degeneracy_map(s, m + 2, i), degeneracy_map(s, m + 1, j));
                        PdPoly b = apply2(g, degeneracy_map(s, m + 2, j + 1),
                                          degeneracy_map(s, m + 1, i));
                        if (!a.equals_mod(b)) fail("degeneracy-degeneracy identity", m, i, j);
                    }
        }
    }
}

}  // namespace prism
