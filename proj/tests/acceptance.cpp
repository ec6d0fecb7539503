// Acceptance gate: eight pinned criteria, one PASS/FAIL line each.
// All parameters (primes, sizes, sample counts, windows, time budgets) are
// fixed here; the binary exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "prism/cohomology.hpp"
#include "prism/suites.hpp"

using namespace prism;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int idx, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

// Pull "key=<number>" out of a check-detail string; 0 if absent.
long detail_count(const SuiteReport& rep, const std::string& check, const std::string& key) {
    for (const auto& c : rep.checks) {
        if (c.name.rfind(check, 0) != 0) continue;
        auto pos = c.detail.find(key + "=");
        if (pos == std::string::npos) continue;
        return std::stol(c.detail.substr(pos + key.size() + 1));
    }
    return 0;
}

bool all_pass(const SuiteReport& rep, std::string& why) {
    for (const auto& c : rep.checks)
        if (c.verdict != Verdict::Pass) {
            why = c.name + ": " + verdict_str(c.verdict) +
                  (c.detail.empty() ? "" : " - " + c.detail);
            return false;
        }
    return true;
}

SuiteConfig pinned(long p) {
    SuiteConfig cfg;
    cfg.p = p;
    cfg.precision = 2;
    cfg.pd_bound = 6;
    cfg.t_window = 3;
    cfg.depth = 3;
    cfg.seed = 2026;
    return cfg;
}

// 1. Witt ring laws on >= 200 random vectors, p in {2,3}, length <= 3, <= 10 s.
void criterion1() {
    Timer t;
    long vectors = 0;
    std::string why;
    bool ok = true;
    for (long p : {2L, 3L}) {
        SuiteReport rep = suite_witt_laws(pinned(p));
        ok = ok && all_pass(rep, why);
        vectors += detail_count(rep, "ring-laws", "vectors") +
                   detail_count(rep, "ghost-consistency", "vectors");
    }
    double s = t.secs();
    ok = ok && vectors >= 200 && s <= 10.0;
    std::ostringstream d;
    d << "vectors=" << vectors << ", " << s << "s" << (why.empty() ? "" : ", " + why);
    report(1, "Witt ring laws, p in {2,3}, L <= 3", ok, d.str());
}

// 2. Joyal-coordinate / ghost consistency on >= 100 samples.
void criterion2() {
    long samples = 0;
    std::string why;
    bool ok = true;
    for (long p : {2L, 3L}) {
        SuiteReport rep = suite_delta_congruence(pinned(p));
        ok = ok && all_pass(rep, why);
        samples += detail_count(rep, "joyal-ghost-coherence", "samples");
    }
    ok = ok && samples >= 100;
    report(2, "Joyal coordinates match iterated-phi ghosts", ok,
           "samples=" + std::to_string(samples) + (why.empty() ? "" : ", " + why));
}

// 3. High-congruence suite: >= 50 exact-order pairs over m in {1,2,3},
//    worked instance bit-exact, <= 30 s.
void criterion3() {
    Timer t;
    long pairs = 0;
    std::string why;
    bool ok = true;
    for (long p : {2L, 3L}) {
        SuiteReport rep = suite_delta_congruence(pinned(p));
        ok = ok && all_pass(rep, why);
        for (const char* m : {"high-congruence-m1", "high-congruence-m2", "high-congruence-m3"})
            pairs += detail_count(rep, m, "pairs");
    }
    double s = t.secs();
    ok = ok && pairs >= 50 && s <= 30.0;
    std::ostringstream d;
    d << "pairs=" << pairs << ", " << s << "s" << (why.empty() ? "" : ", " + why);
    report(3, "congruence lemma, m in {1,2,3}, worked instance exact", ok, d.str());
}

// 4. Envelope key property (>= 20 chart pairs, iterate formula n in {1,2})
//    plus full cosimplicial identity check at depth 3, all flavors, <= 2 min.
void criterion4() {
    Timer t;
    long chart_pairs = 0;
    std::string why;
    bool ok = true;
    for (long p : {2L, 3L}) {
        SuiteReport rep = suite_envelope_key_prop(pinned(p));  // depth pinned to 3
        ok = ok && all_pass(rep, why);
        chart_pairs += detail_count(rep, "phi-y-two-charts", "pairs");
    }
    double s = t.secs();
    ok = ok && chart_pairs >= 20 && s <= 120.0;
    std::ostringstream d;
    d << "chart-pairs=" << chart_pairs << ", " << s << "s"
      << (why.empty() ? "" : ", " + why);
    report(4, "envelope phi(Y) + iterate formula + cosimplicial identities, depth 3", ok,
           d.str());
}

// 5. Stratification <-> connection equivalence: >= 100 random round trips and
//    >= 20 adversarial rejections, <= 1 min.
void criterion5() {
    Timer t;
    long rt = 0, adv = 0;
    std::string why;
    bool ok = true;
    for (long p : {2L, 3L}) {
        SuiteReport rep = suite_stratification_equivalence(pinned(p));
        ok = ok && all_pass(rep, why);
        rt += detail_count(rep, "round-trip-and-cocycle", "instances");
        adv += detail_count(rep, "adversarial-tampered-theta", "tampered") + 2;
    }
    double s = t.secs();
    ok = ok && rt >= 100 && adv >= 20 && s <= 60.0;
    std::ostringstream d;
    d << "round-trips=" << rt << ", adversarial=" << adv << ", " << s << "s"
      << (why.empty() ? "" : ", " + why);
    report(5, "stratification equivalence, random + adversarial", ok, d.str());
}

// 6. Comparison isomorphism: >= 20 instances per (p, n) in {2,3} x {1,2}.
void criterion6() {
    std::string why;
    bool ok = true;
    long min_count = 1000;
    for (long p : {2L, 3L}) {
        SuiteReport rep = suite_comparison_iso(pinned(p));
        ok = ok && all_pass(rep, why);
        for (const char* n : {"iso-descent-cocycle-n1", "iso-descent-cocycle-n2"})
            min_count = std::min(min_count, detail_count(rep, n, "instances"));
    }
    ok = ok && min_count >= 20;
    report(6, "comparison isomorphism, descent, triple cocycle", ok,
           "min-instances-per-cell=" + std::to_string(min_count) +
               (why.empty() ? "" : ", " + why));
}

// 7. Cohomology comparison grid: p in {2,3}, precision n+1 with n in {0,1},
//    rank <= 2, d = 1, T-window in {3,5}, pd bound pinned at 4, <= 5 min;
//    includes the trivial-crystal oracle instance.
void criterion7() {
    Timer t;
    std::string why;
    bool ok = true;
    for (long p : {2L, 3L})
        for (int w : {3, 5}) {
            SuiteConfig cfg = pinned(p);
            cfg.pd_bound = 4;
            cfg.t_window = w;
            SuiteReport rep = suite_cohomology_compare(cfg);
            if (!all_pass(rep, why)) {
                ok = false;
                why = "p=" + std::to_string(p) + " W=" + std::to_string(w) + ": " + why;
            }
        }
    double s = t.secs();
    ok = ok && s <= 300.0;
    std::ostringstream d;
    d << s << "s" << (why.empty() ? "" : ", " + why);
    report(7, "cohomology comparison grid with oracle instance", ok, d.str());
}

// 8. Two-chart variant: >= 10 instances where the extended-chart de Rham
//    complex matches the one-chart one in cohomology, stably.
void criterion8() {
    Timer t;
    std::mt19937_64 rng(2026);
    WindowParams wp{3, 4, 2, 3};
    int count = 0;
    bool ok = true;
    std::string why;
    try {
        for (long p : {2L, 3L})
            for (int N : {1, 2})
                for (int r = 1; r <= 2; ++r)
                    for (int it = 0; it < 2 && count < 12 && ok; ++it) {
                    PConnection P = suite_detail::rnd_conn(rng, p, N, 1, r);
                    SigmaConnection C;
                    C.ctx = P.ctx;
                    C.d = 1;
                    C.r = r;
                    C.h = 1;
                    C.phi = {P.phi};
                    SigmaConnection C2 = sigma_base_change(C, 2);
                    auto theta = sigma_stratification(C2);
                    if (!sigma_cocycle_check(theta, C2.ctx, C2.d, C2.r, C2.h * C2.d)) {
                        ok = false;
                        why = "cocycle failure";
                        break;
                    }
                    SigmaCompareResult sr = sigma_compare(P, C2, wp);
                    if (!(sr.equal0 && sr.equal1 && sr.stable)) {
                        ok = false;
                        why = "rank mismatch at p=" + std::to_string(p);
                        break;
                    }
                    ++count;
                }
    } catch (const Error& e) {
        ok = false;
        why = e.what();
    }
    ok = ok && count >= 10;
    std::ostringstream d;
    d << "instances=" << count << ", " << t.secs() << "s" << (why.empty() ? "" : ", " + why);
    report(8, "two-chart de Rham comparison, h = 2", ok, d.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria pass"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) + " failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
