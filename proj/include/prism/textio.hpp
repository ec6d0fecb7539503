#pragma once
// Textual grammar for (pd) polynomials, e.g.  "-3*T1^2*Y1[2] + 5*T^-1 - 7".
//
// Ordinary variables carry integer exponents via '^' (negative allowed);
// pd variables carry their divided-power index in square brackets.  When a
// class of variables has a single member the bare name ("T", "Y") is accepted
// alongside the indexed form ("T1", "Y1").

#include <cctype>
#include <string>
#include <vector>

#include "prism/pd.hpp"

namespace prism {

struct VarTable {
    std::vector<std::string> laurent;  // names of ordinary variables
    std::vector<std::string> pd;       // names of pd variables

    static VarTable standard(int d, int npd, const std::string& lbase = "T",
                             const std::string& pbase = "Y") {
        VarTable v;
        for (int i = 1; i <= d; ++i)
            v.laurent.push_back(d == 1 ? lbase : lbase + std::to_string(i));
        for (int i = 1; i <= npd; ++i)
            v.pd.push_back(npd == 1 ? pbase : pbase + std::to_string(i));
        return v;
    }
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& s, const VarTable& vars, Context ctx, int bound)
        : s_(s), vars_(vars), ctx_(ctx), bound_(bound) {}

    PdPoly parse() {
        PdPoly r = PdPoly::zero(ctx_, static_cast<int>(vars_.laurent.size()),
                                static_cast<int>(vars_.pd.size()), bound_);
        skip_ws();
        if (at_end()) throw ConfigInvalid("empty polynomial");
        bool neg = eat_sign();
        r = r + parse_term(neg);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = s_[pos_];
            if (c != '+' && c != '-')
                throw ConfigInvalid("polynomial parse error at '" + s_.substr(pos_) + "'");
            ++pos_;
            r = r + parse_term(c == '-');
        }
        return r;
    }

private:
    const std::string& s_;
    const VarTable& vars_;
    Context ctx_;
    int bound_;
    size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat_sign() {
        skip_ws();
        if (!at_end() && (s_[pos_] == '+' || s_[pos_] == '-')) return s_[pos_++] == '-';
        return false;
    }

    PdPoly parse_term(bool neg) {
        int d = static_cast<int>(vars_.laurent.size());
        int npd = static_cast<int>(vars_.pd.size());
        PdPoly t = PdPoly::one(ctx_, d, npd, bound_);
        if (neg) t = t.scaled(-1);
        bool first = true;
        while (true) {
            skip_ws();
            if (!first) {
                if (at_end() || s_[pos_] != '*') break;
                ++pos_;
                skip_ws();
            }
            first = false;
            t = t * parse_factor();
            skip_ws();
            if (at_end() || s_[pos_] != '*') break;
        }
        return t;
    }

    PdPoly parse_factor() {
        int d = static_cast<int>(vars_.laurent.size());
        int npd = static_cast<int>(vars_.pd.size());
        skip_ws();
        if (at_end()) throw ConfigInvalid("polynomial parse error: expected factor");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PdPoly::from_laurent(
                LaurentPoly::constant(ctx_, d, Int(parse_digits())), npd, bound_);
        }
        std::string name = parse_name();
        // pd variable?
        int pidx = lookup(vars_.pd, name);
        if (pidx >= 0) {
            skip_ws();
            if (at_end() || s_[pos_] != '[')
                throw ConfigInvalid("pd variable '" + name + "' needs a bracket index");
            ++pos_;
            long k = std::stol(parse_digits());
            skip_ws();
            if (at_end() || s_[pos_] != ']') throw ConfigInvalid("missing ']'");
            ++pos_;
            return PdPoly::pd_monomial(ctx_, d, npd, bound_, pidx, static_cast<int>(k));
        }
        int lidx = lookup(vars_.laurent, name);
        if (lidx < 0) throw ConfigInvalid("unknown variable '" + name + "'");
        int e = 1;
        skip_ws();
        if (!at_end() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            bool eneg = false;
            if (!at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) eneg = s_[pos_++] == '-';
            e = static_cast<int>(std::stol(parse_digits()));
            if (eneg) e = -e;
        }
        return PdPoly::from_laurent(LaurentPoly::monomial(ctx_, d, lidx, e), npd, bound_);
    }

    std::string parse_digits() {
        skip_ws();
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ConfigInvalid("expected integer");
        return s_.substr(start, pos_ - start);
    }
    std::string parse_name() {
        size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                             s_[pos_] == '_' || s_[pos_] == '(' || s_[pos_] == ')'))
            ++pos_;
        if (pos_ == start)
            throw ConfigInvalid("polynomial parse error at '" + s_.substr(pos_) + "'");
        // Trim a trailing '(' pair imbalance defensively (names like "X1(2)").
        return s_.substr(start, pos_ - start);
    }
    static int lookup(const std::vector<std::string>& names, const std::string& n) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        // single-variable shorthand: "T1" resolves to a lone variable "T"
        if (names.size() == 1 && n == names[0] + "1") return 0;
        return -1;
    }
};

}  // namespace detail

inline PdPoly parse_pd(const std::string& s, const VarTable& vars, Context ctx, int bound) {
    return detail::PolyParser(s, vars, ctx, bound).parse();
}

inline LaurentPoly parse_laurent(const std::string& s, const VarTable& vars, Context ctx) {
    VarTable v = vars;
    v.pd.clear();
    PdPoly f = detail::PolyParser(s, v, ctx, 0).parse();
    return f.coefficient({});
}

inline std::string pd_str(const PdPoly& f, const VarTable& vars) {
    if (f.is_zero()) return f.truncated() ? "0 (truncated)" : "0";
    std::string out;
    bool first = true;
    for (const auto& [pdexp, coeff] : f.terms()) {
        for (const auto& [lexp, c] : coeff.terms()) {
            Int cc = c;
            if (!f.ctx().exact() && cc * 2 > f.ctx().modulus()) cc -= f.ctx().modulus();
            if (!first) out += (cc < 0 ? " - " : " + ");
            else if (cc < 0) out += "-";
            first = false;
            Int ac = abs(cc);
            bool any = false;
            std::string varpart;
            for (size_t i = 0; i < lexp.size(); ++i) {
                if (lexp[i] == 0) continue;
                if (any) varpart += "*";
                varpart += vars.laurent[i];
                if (lexp[i] != 1) varpart += "^" + std::to_string(lexp[i]);
                any = true;
            }
            for (size_t i = 0; i < pdexp.size(); ++i) {
                if (pdexp[i] == 0) continue;
                if (any) varpart += "*";
                varpart += vars.pd[i] + "[" + std::to_string(pdexp[i]) + "]";
                any = true;
            }
            if (ac != 1 || !any) {
                out += ac.get_str();
                if (any) out += "*";
            }
            out += varpart;
        }
    }
    if (f.truncated()) out += " (truncated)";
    return out;
}

}  // namespace prism
