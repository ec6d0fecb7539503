#pragma once
// The seven verification suites behind the CLI and the acceptance gate.
// Every suite is a deterministic function of its SuiteConfig (including the
// seed); each produces a SuiteReport with one CheckRecord per logical check.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "prism/cohomology.hpp"
#include "prism/cosimplicial.hpp"
#include "prism/crystals.hpp"
#include "prism/delta.hpp"
#include "prism/envelope.hpp"
#include "prism/report.hpp"
#include "prism/witt.hpp"

namespace prism {
namespace suite_detail {

// Run one check body; the body fills `detail` and returns pass/fail.
// Inconclusive propagates as a verdict, any other library error as a failure.
template <typename F>
inline void run_check(SuiteReport& rep, const std::string& name, F&& body) {
    CheckRecord c;
    c.name = name;
    try {
        c.verdict = body(c.detail) ? Verdict::Pass : Verdict::Fail;
    } catch (const Inconclusive& e) {
        c.verdict = Verdict::Inconclusive;
        c.detail = e.what();
    } catch (const Error& e) {
        c.verdict = Verdict::Fail;
        c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
}

inline std::uint64_t mix_seed(const SuiteConfig& cfg, std::uint64_t salt) {
    std::uint64_t s = cfg.seed * 0x9e3779b97f4a7c15ull + salt;
    s ^= (static_cast<std::uint64_t>(cfg.p) << 32) ^ static_cast<std::uint64_t>(cfg.precision);
    return s ? s : 1;
}

inline LaurentPoly mono1(const Context& c, int e, long coef) {
    LaurentPoly f(c, 1);
    f.add_term({e}, coef);
    return f;
}

inline LaurentPoly rnd_entry(std::mt19937_64& rng, const Context& c) {
    LaurentPoly f(c, 1);
    // mostly constants, occasionally a small polynomial entry
    f.add_term({0}, static_cast<long>(rng() % 19) - 9);
    if (rng() % 3 == 0) f.add_term({1 + static_cast<int>(rng() % 2)}, static_cast<long>(rng() % 5));
    return f;
}

inline bool witt_same(const WittVec& a, const WittVec& b) {
    if (a.a.size() != b.a.size()) return false;
    for (size_t i = 0; i < a.a.size(); ++i)
        if (!(a.a[i] == b.a[i])) return false;
    return true;
}

inline PConnection rnd_conn(std::mt19937_64& rng, long p, int N, int d, int r) {
    PConnection P;
    P.ctx = Context{p, N};
    P.d = d;
    P.r = r;
    long mod = 1;
    for (int i = 0; i < N; ++i) mod *= p;
    for (int ax = 0; ax < d; ++ax) {
        Mat m = mat_zero(P.ctx, d, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                long v = static_cast<long>(rng() % static_cast<unsigned long>(mod));
                if (j <= i) v *= p;  // strictly upper-triangular mod p
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    LaurentPoly::constant(P.ctx, d, v);
            }
        P.phi.push_back(m);
    }
    if (d == 2) P.phi[1] = mat_mul(P.phi[0], P.phi[0]);  // force commutation
    return P;
}

inline std::string ranks_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

}  // namespace suite_detail

// ---------------------------------------------------------------------------
// witt-laws: ring laws, ghost consistency, Teichmuller, Frobenius/Verschiebung
// ---------------------------------------------------------------------------
inline SuiteReport suite_witt_laws(const SuiteConfig& cfg) {
    using namespace suite_detail;
    SuiteReport rep{"witt-laws", cfg, {}};
    std::mt19937_64 rng(mix_seed(cfg, 0x77));
    long p = cfg.p;
    Context c{p, 0};
    const int kVecs = 120;

    auto rnd_vec = [&](int len) {  // len entries = Witt length len-1
        WittVec x;
        x.p = p;
        for (int i = 0; i < len; ++i) x.a.push_back(rnd_entry(rng, c));
        return x;
    };

    run_check(rep, "ring-laws", [&](std::string& detail) {
        int n = 0;
        for (int it = 0; it < kVecs / 3; ++it) {
            int L = 1 + it % 3;
            WittVec a = rnd_vec(L), b = rnd_vec(L), d = rnd_vec(L);
            n += 3;
            if (!witt_same(witt_add(a, b), witt_add(b, a))) return false;
            if (!witt_same(witt_mul(a, b), witt_mul(b, a))) return false;
            if (!witt_same(witt_add(witt_add(a, b), d), witt_add(a, witt_add(b, d))))
                return false;
            if (!witt_same(witt_mul(witt_mul(a, b), d), witt_mul(a, witt_mul(b, d))))
                return false;
            if (!witt_same(witt_mul(a, witt_add(b, d)),
                           witt_add(witt_mul(a, b), witt_mul(a, d))))
                return false;
            if (!witt_same(witt_add(a, witt_neg(a)), witt_zero(p, L - 1, c, 1))) return false;
            if (!witt_same(witt_add(a, witt_zero(p, L - 1, c, 1)), a)) return false;
            if (!witt_same(witt_mul(a, witt_one(p, L - 1, c, 1)), a)) return false;
        }
        detail = "vectors=" + std::to_string(n) + " p=" + std::to_string(p) + " L<=3";
        return true;
    });

    run_check(rep, "ghost-consistency", [&](std::string& detail) {
        int n = 0;
        for (int it = 0; it < 20; ++it) {
            int L = 1 + it % 3;
            WittVec a = rnd_vec(L), b = rnd_vec(L);
            n += 2;
            auto ga = ghost_components(a), gb = ghost_components(b);
            auto gs = ghost_components(witt_add(a, b));
            auto gp = ghost_components(witt_mul(a, b));
            for (int i = 0; i < L; ++i) {
                if (!(gs[static_cast<size_t>(i)] ==
                      ga[static_cast<size_t>(i)] + gb[static_cast<size_t>(i)]))
                    return false;
                if (!(gp[static_cast<size_t>(i)] ==
                      ga[static_cast<size_t>(i)] * gb[static_cast<size_t>(i)]))
                    return false;
            }
            if (!witt_same(from_ghost(p, ga), a)) return false;
        }
        detail = "vectors=" + std::to_string(n);
        return true;
    });

    run_check(rep, "teichmuller-multiplicative", [&](std::string& detail) {
        for (int it = 0; it < 15; ++it) {
            LaurentPoly x = rnd_entry(rng, c), y = rnd_entry(rng, c);
            WittVec t = witt_mul(teichmuller(p, 2, x), teichmuller(p, 2, y));
            if (!witt_same(t, teichmuller(p, 2, x * y))) return false;
        }
        detail = "samples=15 L=3";
        return true;
    });

    run_check(rep, "frobenius-verschiebung", [&](std::string& detail) {
        for (int it = 0; it < 15; ++it) {
            WittVec a = rnd_vec(3);
            auto ga = ghost_components(a);
            auto gf = ghost_components(frobenius(a));
            for (size_t i = 0; i + 1 < ga.size(); ++i)
                if (!(gf[i] == ga[i + 1])) return false;
            auto gv = ghost_components(verschiebung(a));
            if (!gv[0].is_zero()) return false;
            for (size_t i = 1; i < gv.size(); ++i)
                if (!(gv[i] == ga[i - 1].scaled(p))) return false;
        }
        detail = "samples=15 L=3";
        return true;
    });

    return rep;
}

// ---------------------------------------------------------------------------
// delta-congruence: worked instance, Joyal coherence, high-congruence lemma
// ---------------------------------------------------------------------------
inline SuiteReport suite_delta_congruence(const SuiteConfig& cfg) {
    using namespace suite_detail;
    SuiteReport rep{"delta-congruence", cfg, {}};
    std::mt19937_64 rng(mix_seed(cfg, 0xd1));
    long p = cfg.p;

    run_check(rep, "worked-instance", [&](std::string& detail) {
        Context c{2, 0};
        DeltaStructure D = DeltaStructure::make(c, {mono1(c, 2, 2)});
        LaurentPoly T = mono1(c, 1, 1);
        if (!(phi(D, T) == mono1(c, 2, 5))) return false;
        if (!(delta_iter(D, T, 2) == mono1(c, 4, 23))) return false;
        auto j = joyal_coords(D, T, 2);
        bool ok = j[1] == mono1(c, 2, 2) && j[2] == mono1(c, 4, 29);
        detail = "p=2 fixture; exact coefficients";
        return ok;
    });

    run_check(rep, "joyal-ghost-coherence", [&](std::string& detail) {
        Context c{p, 0};
        DeltaStructure D = DeltaStructure::make(c, {mono1(c, 2, 1) + mono1(c, 0, 1)});
        int samples = 0;
        for (int it = 0; it < 60; ++it) {
            LaurentPoly x(c, 1);
            for (int t = 0; t < 2; ++t)
                x.add_term({static_cast<int>(rng() % 3)}, static_cast<long>(rng() % 7));
            auto j = joyal_coords(D, x, 2);
            // reassemble the ghost components from the Joyal coordinates
            std::vector<LaurentPoly> g;
            for (int n = 0; n <= 2; ++n) {
                LaurentPoly s = LaurentPoly::zero(c, 1);
                Int pk = 1;
                for (int k = 0; k <= n; ++k) {
                    s = s + j[static_cast<size_t>(k)]
                                .pow(static_cast<long>(p_power(p, n - k).get_si()))
                                .scaled(pk);
                    pk *= p;
                }
                g.push_back(s);
            }
            for (int n = 0; n <= 2; ++n)
                if (!(g[static_cast<size_t>(n)] == phi_iter(D, x, n))) return false;
            ++samples;
        }
        detail = "samples=" + std::to_string(samples);
        return true;
    });

    long accepted_total = 0;
    for (long m : {1L, 2L, 3L}) {
        run_check(rep, "high-congruence-m" + std::to_string(m), [&](std::string& detail) {
            Context c{p, static_cast<int>(3 * m + cfg.precision + 4)};
            long accepted = 0;
            for (int it = 0; it < 60 && accepted < 10; ++it) {
                LaurentPoly base(c, 1), pert(c, 1);
                for (int t = 0; t < 2; ++t) {
                    base.add_term({static_cast<int>(rng() % 4)}, static_cast<long>(rng() % 9));
                    pert.add_term({static_cast<int>(rng() % 4)},
                                  static_cast<long>(rng() % (p - 1) + 1));
                }
                DeltaStructure D1 = DeltaStructure::make(c, {base});
                DeltaStructure D2 = DeltaStructure::make(
                    c, {base + pert.scaled(p_power(p, static_cast<int>(m)))});
                LaurentPoly r = mono1(c, 1, 1);
                LaurentPoly diff = delta_of(D1, r) - delta_of(D2, r);
                if (diff.min_valuation(m + 1) != m) continue;  // exact order m only
                verify_high_congruence(D1, D2, r, m, std::min(m, 2L));
                ++accepted;
            }
            accepted_total += accepted;
            detail = "pairs=" + std::to_string(accepted);
            if (accepted < 5)
                throw Inconclusive("too few exact-order-" + std::to_string(m) + " pairs");
            return true;
        });
    }

    run_check(rep, "joyal-congruence", [&](std::string& detail) {
        Context c{p, 10};
        DeltaStructure D1 = DeltaStructure::make(c, {LaurentPoly::zero(c, 1)});
        DeltaStructure D2 = DeltaStructure::make(c, {mono1(c, 2, p)});
        JoyalCongruenceResult r = verify_joyal_congruence(D1, D2, mono1(c, 1, 1), 1);
        detail = r.note + "; pairs-total=" + std::to_string(accepted_total);
        return r.note == "top-index corrected to m+1";
    });

    return rep;
}

// ---------------------------------------------------------------------------
// envelope-key-prop: phi(Y) charts, iterate formula, cosimplicial identities
// ---------------------------------------------------------------------------
inline SuiteReport suite_envelope_key_prop(const SuiteConfig& cfg) {
    using namespace suite_detail;
    SuiteReport rep{"envelope-key-prop", cfg, {}};
    std::mt19937_64 rng(mix_seed(cfg, 0xe1));
    long p = cfg.p;

    run_check(rep, "phi-y-two-charts", [&](std::string& detail) {
        Context c{p, std::max(cfg.precision, 6)};
        int ok = 0;
        for (int it = 0; it < 12; ++it) {
            LaurentPoly d1(c, 1), pert(c, 1);
            for (int t = 0; t < 2; ++t) {
                d1.add_term({static_cast<int>(rng() % 4) - 1}, static_cast<long>(rng() % 7));
                pert.add_term({static_cast<int>(rng() % 3)}, static_cast<long>(rng() % 5));
            }
            Envelope E = make_envelope(c, std::max(cfg.pd_bound, 8),
                                       DeltaStructure::make(c, {d1}), {d1 + pert.scaled(p)});
            if (!verify_phi_y(E, 0)) return false;
            ++ok;
        }
        detail = "pairs=" + std::to_string(ok);
        return true;
    });

    run_check(rep, "congruence-requirement", [&](std::string& detail) {
        Context c{p, 6};
        DeltaStructure D1 = DeltaStructure::make(c, {mono1(c, 1, 1)});
        try {
            make_envelope(c, 8, D1, {LaurentPoly::zero(c, 1)});
            return false;
        } catch (const ConfigInvalid&) {
            detail = "incongruent pair rejected";
            return true;
        }
    });

    for (int n : {1, 2}) {
        run_check(rep, "iterate-formula-n" + std::to_string(n), [&](std::string& detail) {
            long pn = 1;
            for (int j = 0; j < n; ++j) pn *= p;
            int bound = std::max<long>(cfg.pd_bound, pn + 3);
            Context c{p, std::max(cfg.precision, n + 4)};
            int cases = 0;
            for (int it = 0; it < 5; ++it) {
                LaurentPoly d1(c, 1);
                d1.add_term({static_cast<int>(rng() % 3)}, static_cast<long>(rng() % 5));
                d1.add_term({1}, static_cast<long>(rng() % 3));
                Envelope E = make_envelope(c, bound, DeltaStructure::make(c, {d1}), {d1});
                IterateCheck ic = verify_iterate_formula(E, 0, n);
                if (!ic.top_coefficient_ok || !ic.remainder_in_lambda) return false;
                ++cases;
            }
            detail = "cases=" + std::to_string(cases) + " bound=" + std::to_string(bound);
            return true;
        });
    }

    run_check(rep, "cosimplicial-identities", [&](std::string& detail) {
        Context c{p, 2};
        for (auto fl : {Flavor::Plain, Flavor::Tilde, Flavor::Sigma}) {
            CosimplicialSpec s{fl, c, 1, 5, 2};
            verify_cosimplicial_identities(s, cfg.depth);
            CosimplicialSpec s2{fl, c, 2, 4, 2};
            verify_cosimplicial_identities(s2, std::min(cfg.depth, 2));
        }
        detail = "flavors=3 depth=" + std::to_string(cfg.depth);
        return true;
    });

    return rep;
}

// ---------------------------------------------------------------------------
// stratification-equivalence: connection <-> stratification round trips
// ---------------------------------------------------------------------------
inline SuiteReport suite_stratification_equivalence(const SuiteConfig& cfg) {
    using namespace suite_detail;
    SuiteReport rep{"stratification-equivalence", cfg, {}};
    std::mt19937_64 rng(mix_seed(cfg, 0x51));
    long p = cfg.p;
    int N = std::min(cfg.precision, 3);

    run_check(rep, "round-trip-and-cocycle", [&](std::string& detail) {
        int n = 0;
        for (int it = 0; it < 50; ++it) {
            int d = 1 + it % 2;
            int r = 1 + (it / 2) % 2;
            PConnection P = rnd_conn(rng, p, N, d, r);
            Stratification S = from_connection(P);
            if (!cocycle_check(S)) return false;
            PConnection Q = to_connection(S);
            for (int ax = 0; ax < d; ++ax)
                if (!mat_equal(P.phi[static_cast<size_t>(ax)], Q.phi[static_cast<size_t>(ax)]))
                    return false;
            ++n;
        }
        detail = "instances=" + std::to_string(n) + " d<=2 r<=2 N=" + std::to_string(N);
        return true;
    });

    run_check(rep, "adversarial-tampered-theta", [&](std::string& detail) {
        int caught = 0;
        for (int it = 0; it < 16; ++it) {
            PConnection P = rnd_conn(rng, p, 2, 1, 2);
            Stratification S = from_connection(P);
            bool tampered = false;
            for (auto& [k, m] : S.theta)
                if (k[0] == static_cast<int>(1 + it % 2)) {
                    m[0][1] = m[0][1] + LaurentPoly::one(S.ctx, 1);
                    tampered = true;
                    break;
                }
            if (!tampered) continue;
            bool bad = !cocycle_check(S);
            if (!bad) {
                // the tamper may coincide with another valid stratification;
                // it must then disagree with the round trip
                PConnection Q = to_connection(S);
                bad = !mat_equal(P.phi[0], Q.phi[0]);
            }
            if (!bad) return false;
            ++caught;
        }
        detail = "tampered=" + std::to_string(caught);
        return caught >= 8;
    });

    run_check(rep, "adversarial-non-nilpotent", [&](std::string& detail) {
        Context c{p, 2};
        PConnection P;
        P.ctx = c;
        P.d = 1;
        P.r = 1;
        Mat m = mat_zero(c, 1, 1);
        m[0][0] = LaurentPoly::one(c, 1);
        P.phi = {m};
        try {
            from_connection(P);
            return false;
        } catch (const NotNilpotent&) {
            detail = "unit phi rejected";
            return true;
        }
    });

    run_check(rep, "adversarial-non-commuting", [&](std::string& detail) {
        PConnection P = rnd_conn(rng, p, 2, 2, 2);
        LaurentPoly one = LaurentPoly::one(P.ctx, 2);
        P.phi[1][0][1] = P.phi[1][0][1] + one;
        P.phi[1][1][0] = P.phi[1][1][0] + one.scaled(2);
        if (mat_equal(mat_mul(P.phi[0], P.phi[1]), mat_mul(P.phi[1], P.phi[0]))) {
            detail = "perturbation accidentally commutes; skipped";
            return true;
        }
        try {
            from_connection(P);
            return false;
        } catch (const NotCommuting&) {
            detail = "non-commuting pair rejected";
            return true;
        }
    });

    return rep;
}

// ---------------------------------------------------------------------------
// comparison-iso: exp-twist isomorphism, descent, triple cocycle
// ---------------------------------------------------------------------------
inline SuiteReport suite_comparison_iso(const SuiteConfig& cfg) {
    using namespace suite_detail;
    SuiteReport rep{"comparison-iso", cfg, {}};
    std::mt19937_64 rng(mix_seed(cfg, 0xc1));
    long p = cfg.p;

    for (int n : {1, 2}) {
        run_check(rep, "iso-descent-cocycle-n" + std::to_string(n), [&](std::string& detail) {
            int count = 0;
            for (int it = 0; it < 20; ++it) {
                int r = 1 + it % 2;
                PConnection P = rnd_conn(rng, p, n + 1, 1, r);
                if (!verify_inverse(P, P, cfg.pd_bound)) return false;
                verify_descent(P, cfg.pd_bound);
                verify_triple_cocycle(P, cfg.pd_bound);
                ++count;
            }
            detail = "instances=" + std::to_string(count) + " N=" + std::to_string(n + 1);
            return true;
        });
    }

    run_check(rep, "mismatched-pair-fails", [&](std::string& detail) {
        PConnection P = rnd_conn(rng, p, 2, 1, 2);
        PConnection Q = P;
        Q.phi[0][0][1] = Q.phi[0][0][1] + LaurentPoly::constant(Q.ctx, 1, p);
        detail = "perturbed partner rejected";
        return !verify_inverse(P, Q, cfg.pd_bound);
    });

    return rep;
}

// ---------------------------------------------------------------------------
// cohomology-compare: Cech-Alexander vs totalization vs de Rham ranks
// ---------------------------------------------------------------------------
inline SuiteReport suite_cohomology_compare(const SuiteConfig& cfg) {
    using namespace suite_detail;
    SuiteReport rep{"cohomology-compare", cfg, {}};
    std::mt19937_64 rng(mix_seed(cfg, 0xca));
    long p = cfg.p;
    WindowParams wp{cfg.t_window, cfg.pd_bound, std::min(cfg.depth, 2), 3};

    run_check(rep, "oracle-trivial-crystal", [&](std::string& detail) {
        PConnection P;
        P.ctx = Context{p, 1};
        P.d = 1;
        P.r = 1;
        P.phi = {mat_zero(P.ctx, 1, 1)};
        Stratification S = from_connection(P);
        CompareResult r = compare_rho(S, P, wp);
        std::vector<int> expect(static_cast<size_t>(2 * wp.t_window + 1), 1);
        detail = "h0=" + ranks_str(r.h0_ca) + " h1=" + ranks_str(r.h1_ca);
        return r.equal0 && r.equal1 && r.stable && r.h0_ca == expect && r.h1_ca == expect;
    });

    for (int N : {1, 2}) {
        run_check(rep, "random-crystals-N" + std::to_string(N), [&](std::string& detail) {
            int count = 0;
            for (int r_ = 1; r_ <= 2; ++r_)
                for (int it = 0; it < 2; ++it) {
                    PConnection P = rnd_conn(rng, p, N, 1, r_);
                    Stratification S = from_connection(P);
                    CompareResult r = compare_rho(S, P, wp);
                    if (!(r.equal0 && r.equal1 && r.stable)) {
                        detail = "rank " + std::to_string(r_) + ": h0_ca=" +
                                 ranks_str(r.h0_ca) + " h0_dr=" + ranks_str(r.h0_dr);
                        return false;
                    }
                    ++count;
                }
            detail = "instances=" + std::to_string(count) + " r<=2";
            return true;
        });
    }

    return rep;
}

// ---------------------------------------------------------------------------
// ht-sections: truncated sections coincide for deeply congruent structures
// ---------------------------------------------------------------------------
inline SuiteReport suite_ht_sections(const SuiteConfig& cfg) {
    using namespace suite_detail;
    SuiteReport rep{"ht-sections", cfg, {}};
    std::mt19937_64 rng(mix_seed(cfg, 0x47));
    long p = cfg.p;

    for (long m : {1L, 2L}) {
        run_check(rep, "sections-agree-m" + std::to_string(m), [&](std::string& detail) {
            Context c{p, static_cast<int>(6 * (m + 1))};
            LaurentPoly T = mono1(c, 1, 1);
            std::vector<LaurentPoly> samples{T, T + mono1(c, 0, 1), mono1(c, -1, 1)};
            int count = 0;
            for (int it = 0; it < 10; ++it) {
                LaurentPoly base(c, 1), pert(c, 1);
                for (int t = 0; t < 2; ++t) {
                    base.add_term({static_cast<int>(rng() % 3)}, static_cast<long>(rng() % 7));
                    pert.add_term({static_cast<int>(rng() % 3)},
                                  static_cast<long>(rng() % (p - 1) + 1));
                }
                DeltaStructure D1 = DeltaStructure::make(c, {base});
                DeltaStructure D2 = DeltaStructure::make(
                    c, {base + pert.scaled(p_power(p, static_cast<int>(m + 1)))});
                if (!sections_agree(D1, D2, m, samples)) return false;
                ++count;
            }
            detail = "pairs=" + std::to_string(count) + "; congruence order m+1";
            return true;
        });
    }

    run_check(rep, "negative-control", [&](std::string& detail) {
        Context c{p, 12};
        LaurentPoly T = mono1(c, 1, 1);
        std::vector<LaurentPoly> samples{T, T + mono1(c, 0, 1), mono1(c, -1, 1)};
        DeltaStructure D1 = DeltaStructure::make(c, {mono1(c, 2, 1)});
        DeltaStructure D4 = DeltaStructure::make(c, {mono1(c, 1, 1)});
        detail = "incongruent pair disagrees";
        return !sections_agree(D1, D4, 1, samples);
    });

    run_check(rep, "joyal-top-index", [&](std::string& detail) {
        Context c{p, 10};
        DeltaStructure D1 = DeltaStructure::make(c, {LaurentPoly::zero(c, 1)});
        DeltaStructure D2 = DeltaStructure::make(c, {mono1(c, 2, p)});
        JoyalCongruenceResult r = verify_joyal_congruence(D1, D2, mono1(c, 1, 1), 1);
        detail = r.note;
        return r.note == "top-index corrected to m+1";
    });

    return rep;
}

// ---------------------------------------------------------------------------

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    cfg.validate();
    if (name == "witt-laws") return suite_witt_laws(cfg);
    if (name == "delta-congruence") return suite_delta_congruence(cfg);
    if (name == "envelope-key-prop") return suite_envelope_key_prop(cfg);
    if (name == "stratification-equivalence") return suite_stratification_equivalence(cfg);
    if (name == "comparison-iso") return suite_comparison_iso(cfg);
    if (name == "cohomology-compare") return suite_cohomology_compare(cfg);
    if (name == "ht-sections") return suite_ht_sections(cfg);
    throw ConfigInvalid("unknown suite: " + name);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "witt-laws",         "delta-congruence",           "envelope-key-prop",
        "stratification-equivalence", "comparison-iso",    "cohomology-compare",
        "ht-sections"};
    return names;
}

}  // namespace prism
