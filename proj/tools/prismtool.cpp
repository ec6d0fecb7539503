// prismtool: run a verification suite and emit a canonical JSON report.
//
// Exit codes: 0 = all checks pass, 1 = at least one failure,
//             2 = inconclusive (no failure, but some check could not decide),
//             3 = configuration error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "prism/suites.hpp"

namespace {

// --config JSON gives defaults; explicit command-line flags override it.
void load_config_file(const std::string& path, prism::SuiteConfig& cfg,
                      std::string& suite) {
    std::ifstream in(path);
    if (!in) throw prism::ConfigInvalid("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw prism::ConfigInvalid(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw prism::ConfigInvalid("config root must be an object");
    try {
        if (j.contains("suite")) suite = j.at("suite").get<std::string>();
        if (j.contains("p")) cfg.p = j.at("p").get<long>();
        if (j.contains("precision")) cfg.precision = j.at("precision").get<int>();
        if (j.contains("pd_bound")) cfg.pd_bound = j.at("pd_bound").get<int>();
        if (j.contains("t_window")) cfg.t_window = j.at("t_window").get<int>();
        if (j.contains("depth")) cfg.depth = j.at("depth").get<int>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw prism::ConfigInvalid(std::string("config field error: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prismtool: exact-arithmetic verification suites"};

    std::string suite, report_path, config_path;
    prism::SuiteConfig cfg;
    auto* opt_suite = app.add_option("--suite", suite, "suite name");
    auto* opt_p = app.add_option("--p", cfg.p, "prime p");
    auto* opt_prec = app.add_option("--precision", cfg.precision, "p-adic precision N");
    auto* opt_pd = app.add_option("--pd-bound", cfg.pd_bound, "divided-power weight bound");
    auto* opt_tw = app.add_option("--t-window", cfg.t_window, "Laurent exponent window");
    auto* opt_depth = app.add_option("--depth", cfg.depth, "simplicial depth");
    auto* opt_seed = app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_option("--report", report_path, "write JSON report to this path");
    app.add_option("--config", config_path, "JSON config file (flags override it)");
    app.add_flag_callback("--list-suites", [] {
        for (const auto& n : prism::suite_names()) std::cout << n << "\n";
        std::exit(0);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 3;
    }

    try {
        if (!config_path.empty()) {
            prism::SuiteConfig file_cfg;
            std::string file_suite;
            load_config_file(config_path, file_cfg, file_suite);
            if (!*opt_suite && !file_suite.empty()) suite = file_suite;
            if (!*opt_p) cfg.p = file_cfg.p;
            if (!*opt_prec) cfg.precision = file_cfg.precision;
            if (!*opt_pd) cfg.pd_bound = file_cfg.pd_bound;
            if (!*opt_tw) cfg.t_window = file_cfg.t_window;
            if (!*opt_depth) cfg.depth = file_cfg.depth;
            if (!*opt_seed) cfg.seed = file_cfg.seed;
        }
        if (suite.empty()) throw prism::ConfigInvalid("--suite is required");

        prism::SuiteReport rep = prism::run_suite(suite, cfg);
        nlohmann::json j = rep.to_json();
        std::string out = j.dump(2) + "\n";
        if (!report_path.empty()) {
            std::ofstream f(report_path);
            if (!f) throw prism::ConfigInvalid("cannot write report: " + report_path);
            f << out;
        }
        std::cout << out;

        switch (rep.verdict()) {
            case prism::Verdict::Pass: return 0;
            case prism::Verdict::Fail: return 1;
            default: return 2;
        }
    } catch (const prism::ConfigInvalid& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const prism::Inconclusive& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
