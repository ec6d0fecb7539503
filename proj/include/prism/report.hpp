#pragma once
// Suite configuration and machine-readable reports.  JSON output is canonical:
// nlohmann::json keeps object keys sorted, and all values are deterministic
// functions of the configuration (including the seed).

#include <string>
#include <vector>

#include "json.hpp"
#include "prism/errors.hpp"

namespace prism {

struct SuiteConfig {
    long p = 2;
    int precision = 2;      // coefficient precision N (digits base p)
    int pd_bound = 6;       // pd weight window B
    int t_window = 3;       // Laurent window W
    int depth = 2;          // cosimplicial / Cech depth K
    std::uint64_t seed = 0;

    void validate() const {
        if (p < 2 || (p != 2 && p != 3 && p != 5 && p != 7))
            throw ConfigInvalid("p must be one of 2, 3, 5, 7");
        if (precision < 1 || precision > 10) throw ConfigInvalid("precision out of range [1,10]");
        if (pd_bound < 1 || pd_bound > 64) throw ConfigInvalid("pd-bound out of range [1,64]");
        if (t_window < 1 || t_window > 32) throw ConfigInvalid("t-window out of range [1,32]");
        if (depth < 1 || depth > 6) throw ConfigInvalid("depth out of range [1,6]");
    }
};

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct CheckRecord {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string detail;  // free-form; empty when nothing to report
};

struct SuiteReport {
    std::string suite;
    SuiteConfig cfg;
    std::vector<CheckRecord> checks;

    Verdict verdict() const {
        Verdict v = Verdict::Pass;
        for (const auto& c : checks) {
            if (c.verdict == Verdict::Fail) return Verdict::Fail;
            if (c.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
        }
        return v;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["config"] = {{"p", cfg.p},           {"precision", cfg.precision},
                       {"pd_bound", cfg.pd_bound}, {"t_window", cfg.t_window},
                       {"depth", cfg.depth},   {"seed", cfg.seed}};
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json cj;
            cj["name"] = c.name;
            cj["verdict"] = verdict_str(c.verdict);
            if (!c.detail.empty()) cj["detail"] = c.detail;
            j["checks"].push_back(cj);
        }
        j["verdict"] = verdict_str(verdict());
        return j;
    }
};

}  // namespace prism
