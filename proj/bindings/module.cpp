// Python bindings for the main library operations: polynomial arithmetic in
// the textual grammar, Witt-vector laws, delta-structure calculus, envelope
// checks, and the verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "prism/suites.hpp"
#include "prism/textio.hpp"

namespace py = pybind11;
using namespace prism;

namespace {

Context ctx_of(long p, int prec) {
    if (p < 2) throw ConfigInvalid("p must be >= 2");
    if (prec < 0) throw ConfigInvalid("precision must be >= 0");
    return Context{p, prec};
}

LaurentPoly parse1(const std::string& s, const Context& c) {
    return parse_laurent(s, VarTable::standard(1, 0), c);
}

std::string show1(const LaurentPoly& f) { return f.str({"T"}); }

SuiteConfig cfg_from_kwargs(long p, int precision, int pd_bound, int t_window, int depth,
                            std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.p = p;
    cfg.precision = precision;
    cfg.pd_bound = pd_bound;
    cfg.t_window = t_window;
    cfg.depth = depth;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(prismcore, m) {
    m.doc() = "exact p-adic polynomial algebra and verification suites";

    py::register_exception<ConfigInvalid>(m, "ConfigInvalidError");
    py::register_exception<Inconclusive>(m, "InconclusiveError");

    // --- textual polynomial arithmetic (one variable T, context (p, prec)) --
    m.def(
        "poly_add",
        [](const std::string& a, const std::string& b, long p, int prec) {
            Context c = ctx_of(p, prec);
            return show1(parse1(a, c) + parse1(b, c));
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("prec") = 0);
    m.def(
        "poly_mul",
        [](const std::string& a, const std::string& b, long p, int prec) {
            Context c = ctx_of(p, prec);
            return show1(parse1(a, c) * parse1(b, c));
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("prec") = 0);
    m.def(
        "poly_invert",
        [](const std::string& a, long p, int prec) {
            return show1(parse1(a, ctx_of(p, prec)).invert());
        },
        py::arg("a"), py::arg("p"), py::arg("prec"));

    // --- Witt vectors with integer entries --------------------------------
    auto to_witt = [](long p, const std::vector<long>& v) {
        Context c{p, 0};
        WittVec w{p, {}};
        for (long x : v) w.a.push_back(LaurentPoly::constant(c, 1, x));
        return w;
    };
    auto from_witt = [](const WittVec& w) {
        std::vector<long> out;
        for (const auto& e : w.a) out.push_back(e.constant_term().get_si());
        return out;
    };
    m.def(
        "witt_add",
        [=](long p, const std::vector<long>& a, const std::vector<long>& b) {
            return from_witt(prism::witt_add(to_witt(p, a), to_witt(p, b)));
        },
        py::arg("p"), py::arg("a"), py::arg("b"));
    m.def(
        "witt_mul",
        [=](long p, const std::vector<long>& a, const std::vector<long>& b) {
            return from_witt(prism::witt_mul(to_witt(p, a), to_witt(p, b)));
        },
        py::arg("p"), py::arg("a"), py::arg("b"));
    m.def(
        "witt_neg",
        [=](long p, const std::vector<long>& a) {
            return from_witt(prism::witt_neg(to_witt(p, a)));
        },
        py::arg("p"), py::arg("a"));
    m.def(
        "ghost",
        [=](long p, const std::vector<long>& a) {
            std::vector<long> out;
            for (const auto& g : ghost_components(to_witt(p, a)))
                out.push_back(g.constant_term().get_si());
            return out;
        },
        py::arg("p"), py::arg("a"));

    // --- delta structures on Z_p[T, T^-1] ---------------------------------
    m.def(
        "delta_iterate",
        [](const std::string& delta_t, const std::string& x, int n, long p, int prec) {
            Context c = ctx_of(p, prec);
            DeltaStructure D = DeltaStructure::make(c, {parse1(delta_t, c)});
            return show1(delta_iter(D, parse1(x, c), n));
        },
        py::arg("delta_t"), py::arg("x"), py::arg("n"), py::arg("p"), py::arg("prec") = 0);
    m.def(
        "joyal_coordinates",
        [](const std::string& delta_t, const std::string& x, int n, long p, int prec) {
            Context c = ctx_of(p, prec);
            DeltaStructure D = DeltaStructure::make(c, {parse1(delta_t, c)});
            std::vector<std::string> out;
            for (const auto& j : joyal_coords(D, parse1(x, c), n)) out.push_back(show1(j));
            return out;
        },
        py::arg("delta_t"), py::arg("x"), py::arg("n"), py::arg("p"), py::arg("prec") = 0);
    m.def(
        "sections_agree",
        [](const std::string& d1, const std::string& d2, long m, long p, int prec) {
            Context c = ctx_of(p, prec);
            DeltaStructure D1 = DeltaStructure::make(c, {parse1(d1, c)});
            DeltaStructure D2 = DeltaStructure::make(c, {parse1(d2, c)});
            LaurentPoly T = parse1("T1", c);
            std::vector<LaurentPoly> samples{T, T + LaurentPoly::one(c, 1)};
            return prism::sections_agree(D1, D2, m, samples);
        },
        py::arg("d1"), py::arg("d2"), py::arg("m"), py::arg("p"), py::arg("prec") = 12);

    // --- envelope checks ---------------------------------------------------
    m.def(
        "envelope_phi_y_ok",
        [](const std::string& d1, const std::string& d2, long p, int prec, int bound) {
            Context c = ctx_of(p, prec);
            Envelope E = make_envelope(c, bound, DeltaStructure::make(c, {parse1(d1, c)}),
                                       {parse1(d2, c)});
            return verify_phi_y(E, 0);
        },
        py::arg("d1"), py::arg("d2"), py::arg("p"), py::arg("prec") = 6,
        py::arg("bound") = 8);

    // --- suites ------------------------------------------------------------
    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& name, long p, int precision, int pd_bound, int t_window,
           int depth, std::uint64_t seed) {
            SuiteReport rep =
                run_suite(name, cfg_from_kwargs(p, precision, pd_bound, t_window, depth, seed));
            py::dict out;
            out["verdict"] = verdict_str(rep.verdict());
            out["json"] = rep.to_json().dump(2);
            return out;
        },
        py::arg("name"), py::arg("p") = 2, py::arg("precision") = 2, py::arg("pd_bound") = 6,
        py::arg("t_window") = 3, py::arg("depth") = 2, py::arg("seed") = 0);
}
