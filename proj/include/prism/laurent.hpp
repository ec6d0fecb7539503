#pragma once
// Sparse Laurent polynomials with exact coefficients.
//
// A Context fixes the base prime p and an absolute precision `prec`:
//   prec == 0  : coefficients are exact integers (the ring Z[T_1^±..T_d^±]);
//   prec == N>0: coefficients live in Z/p^N, normalized to [0, p^N).
// Mixed-precision operations take the minimum precision of the operands.
// Exact division by p^k requires every coefficient divisible by p^k and
// lowers the precision by k (absolute-precision model).

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "prism/errors.hpp"
#include "prism/intutil.hpp"

namespace prism {

struct Context {
    long p = 2;
    int prec = 0;  // 0 = exact integers, N > 0 = Z/p^N

    bool exact() const { return prec == 0; }
    Int modulus() const { return p_power(p, prec); }
    bool operator==(const Context& o) const { return p == o.p && prec == o.prec; }
};

// Precision of the result of a ring operation on two operands.
inline int combine_prec(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
}

inline Context combine_ctx(const Context& a, const Context& b) {
    if (a.p != b.p) throw Error("context mismatch: different primes");
    return Context{a.p, combine_prec(a.prec, b.prec)};
}

class LaurentPoly {
public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, Int>;

    LaurentPoly() = default;
    LaurentPoly(Context ctx, int nvars) : ctx_(ctx), d_(nvars) {}

    static LaurentPoly constant(Context ctx, int nvars, const Int& c) {
        LaurentPoly f(ctx, nvars);
        f.add_term(Exponent(static_cast<size_t>(nvars), 0), c);
        return f;
    }
    static LaurentPoly zero(Context ctx, int nvars) { return LaurentPoly(ctx, nvars); }
    static LaurentPoly one(Context ctx, int nvars) { return constant(ctx, nvars, 1); }
    // The monomial c * T_i^e.
    static LaurentPoly monomial(Context ctx, int nvars, int var, int e, const Int& c = 1) {
        LaurentPoly f(ctx, nvars);
        Exponent ex(static_cast<size_t>(nvars), 0);
        ex[static_cast<size_t>(var)] = e;
        f.add_term(ex, c);
        return f;
    }

    const Context& ctx() const { return ctx_; }
    int nvars() const { return d_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        for (int e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }
    Int constant_term() const {
        Exponent z(static_cast<size_t>(d_), 0);
        auto it = terms_.find(z);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Exponent& e, const Int& c) {
        if (static_cast<int>(e.size()) != d_) throw Error("exponent arity mismatch");
        Int v = reduce_coeff(c);
        if (v == 0) return;
        auto [it, fresh] = terms_.emplace(e, v);
        if (!fresh) {
            it->second = reduce_coeff(it->second + v);
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r(combine_ctx(ctx_, o.ctx_), check_arity(o));
        r.terms_ = terms_;
        r.renormalize();
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(ctx_, d_);
        for (const auto& [e, c] : terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r(combine_ctx(ctx_, o.ctx_), check_arity(o));
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponent e(static_cast<size_t>(d_));
                for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    LaurentPoly scaled(const Int& c) const {
        LaurentPoly r(ctx_, d_);
        for (const auto& [e, k] : terms_) r.add_term(e, k * c);
        return r;
    }

    LaurentPoly pow(long n) const {
        if (n < 0) throw Error("LaurentPoly::pow: negative exponent; use invert");
        LaurentPoly r = one(ctx_, d_);
        LaurentPoly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        return d_ == o.d_ && ctx_ == o.ctx_ && terms_ == o.terms_;
    }

    // True iff the difference is 0 at the joint precision (ignores ctx equality).
    bool equals_mod(const LaurentPoly& o) const { return (*this - o).is_zero(); }

    // Exact division by p^k.  Lowers precision by k in the bounded model.
    LaurentPoly exact_div_p(long k) const {
        if (k == 0) return *this;
        if (k < 0) throw Error("exact_div_p: negative k");
        Context nctx = ctx_;
        if (!ctx_.exact()) {
            if (ctx_.prec - k <= 0)
                throw PrecisionExhausted("exact_div_p: dividing by p^" + std::to_string(k) +
                                         " at precision " + std::to_string(ctx_.prec));
            nctx.prec = ctx_.prec - static_cast<int>(k);
        }
        Int pk = p_power(ctx_.p, k);
        LaurentPoly r(nctx, d_);
        for (const auto& [e, c] : terms_) {
            if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()))
                throw NotDivisible("exact_div_p: coefficient not divisible by p^" +
                                   std::to_string(k));
            Int q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
            r.add_term(e, q);
        }
        return r;
    }

    // Divide exactly by an arbitrary nonzero integer m.  In a bounded-precision
    // context m = p^v * u with u a unit: multiplies by u^{-1} mod p^prec and
    // applies exact_div_p(v).  In the exact context, plain exact division.
    LaurentPoly exact_div_int(const Int& m) const {
        if (m == 0) throw Error("exact_div_int: division by zero");
        if (ctx_.exact()) {
            LaurentPoly r(ctx_, d_);
            for (const auto& [e, c] : terms_) {
                if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()))
                    throw NotDivisible("exact_div_int: coefficient not divisible");
                Int q;
                mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
                r.add_term(e, q);
            }
            return r;
        }
        long v = valuation(m, ctx_.p, ctx_.prec);
        Int u;
        mpz_divexact(u.get_mpz_t(), m.get_mpz_t(), p_power(ctx_.p, v).get_mpz_t());
        Int uinv;
        if (!mpz_invert(uinv.get_mpz_t(), u.get_mpz_t(), ctx_.modulus().get_mpz_t()))
            throw NotUnit("exact_div_int: unit part not invertible");
        return scaled(uinv).exact_div_p(v);
    }

    // Reduce into a coarser (or equal) precision, or reduce an exact poly mod p^N.
    LaurentPoly with_prec(int newprec) const {
        if (!ctx_.exact() && (newprec == 0 || newprec > ctx_.prec))
            throw PrecisionExhausted("with_prec: cannot raise precision");
        LaurentPoly r(Context{ctx_.p, newprec}, d_);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    // Partial derivative with respect to variable `var`.
    LaurentPoly derivative(int var) const {
        LaurentPoly r(ctx_, d_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(var)];
            if (k == 0) continue;
            Exponent e2 = e;
            e2[static_cast<size_t>(var)] -= 1;
            r.add_term(e2, c * k);
        }
        return r;
    }

    // Inverse, when the reduction mod p is a unit monomial of F_p[T^±]; requires
    // a bounded-precision context unless the element is a unit monomial on the nose.
    LaurentPoly invert() const;

    // Substitute: variable i := images[i].  Negative exponents invert the image.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    // Frobenius-free helpers used across modules ------------------------------
    // Reduction mod p as an element at precision 1.
    LaurentPoly mod_p() const {
        LaurentPoly r(Context{ctx_.p, 1}, d_);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }
    // Minimal v with p^v dividing every coefficient (cap = prec, or `cap` if exact).
    long min_valuation(long cap) const {
        long m = cap;
        for (const auto& [e, c] : terms_) m = std::min(m, valuation(c, ctx_.p, cap));
        return m;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int cc = c;
            // Pretty-print bounded coefficients in the symmetric range.
            if (!ctx_.exact() && cc * 2 > ctx_.modulus()) cc -= ctx_.modulus();
            if (!first) os << (cc < 0 ? " - " : " + ");
            else if (cc < 0) os << "-";
            first = false;
            Int ac = abs(cc);
            bool any_var = false;
            for (int k : e)
                if (k != 0) any_var = true;
            if (ac != 1 || !any_var) os << ac.get_str();
            bool need_star = (ac != 1);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                os << names[i];
                if (e[i] != 1) os << "^" << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    Context ctx_;
    int d_ = 0;
    TermMap terms_;

    Int reduce_coeff(const Int& c) const {
        if (ctx_.exact()) return c;
        Int m = ctx_.modulus();
        Int r = c % m;
        if (r < 0) r += m;
        return r;
    }
    void renormalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = reduce_coeff(it->second);
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
        }
    }
    int check_arity(const LaurentPoly& o) const {
        if (d_ != o.d_) throw Error("variable arity mismatch");
        return d_;
    }
};

inline LaurentPoly LaurentPoly::invert() const {
    // Unit test: mod p the element must be a single monomial with unit coefficient.
    if (is_zero()) throw NotUnit("invert: zero");
    // Find the unique term whose coefficient is a p-unit.
    const Exponent* lead = nullptr;
    Int lead_c;
    for (const auto& [e, c] : terms_) {
        if (c % ctx_.p != 0) {
            if (lead) throw NotUnit("invert: more than one unit-coefficient term mod p");
            lead = &e;
            lead_c = c;
        }
    }
    if (!lead) throw NotUnit("invert: zero mod p");
    // f = c*T^e * (1 + w) with w = 0 mod p.
    if (ctx_.exact()) {
        if (terms_.size() != 1 || (lead_c != 1 && lead_c != -1))
            throw NotUnit("invert: exact context requires a ± unit monomial");
        LaurentPoly r(ctx_, d_);
        Exponent e2(static_cast<size_t>(d_));
        for (size_t i = 0; i < e2.size(); ++i) e2[i] = -(*lead)[i];
        r.add_term(e2, lead_c);
        return r;
    }
    Int cinv;
    if (!mpz_invert(cinv.get_mpz_t(), lead_c.get_mpz_t(), ctx_.modulus().get_mpz_t()))
        throw NotUnit("invert: leading coefficient not invertible");
    LaurentPoly mono_inv(ctx_, d_);
    {
        Exponent e2(static_cast<size_t>(d_));
        for (size_t i = 0; i < e2.size(); ++i) e2[i] = -(*lead)[i];
        mono_inv.add_term(e2, cinv);
    }
    LaurentPoly w = (*this) * mono_inv - one(ctx_, d_);  // = 0 mod p
    // Geometric series: (1+w)^{-1} = sum (-w)^k, terminates since w^prec = 0.
    LaurentPoly acc = one(ctx_, d_);
    LaurentPoly pw = one(ctx_, d_);
    for (int k = 1; k < ctx_.prec; ++k) {
        pw = pw * w;
        if (pw.is_zero()) break;
        acc = (k % 2 ? acc - pw : acc + pw);
    }
    return acc * mono_inv;
}

inline LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (static_cast<int>(images.size()) != d_)
        throw UnsupportedSubstitution("substitute: wrong number of images");
    if (terms_.empty()) {
        Context c = ctx_;
        int nd = d_ ? images[0].nvars() : d_;
        for (const auto& im : images) c = combine_ctx(c, im.ctx());
        return LaurentPoly(c, nd);
    }
    int nd = d_ ? images[0].nvars() : 0;
    Context rctx = ctx_;
    for (const auto& im : images) rctx = combine_ctx(rctx, im.ctx());
    // Power caches, positive and negative.
    std::vector<std::map<int, LaurentPoly>> cache(static_cast<size_t>(d_));
    auto power = [&](int var, int e) -> const LaurentPoly& {
        auto& c = cache[static_cast<size_t>(var)];
        auto it = c.find(e);
        if (it != c.end()) return it->second;
        LaurentPoly val(rctx, nd);
        if (e == 0) val = LaurentPoly::one(rctx, nd);
        else if (e > 0) val = images[static_cast<size_t>(var)].pow(e);
        else val = images[static_cast<size_t>(var)].invert().pow(-e);
        return c.emplace(e, std::move(val)).first->second;
    };
    LaurentPoly r(rctx, nd);
    for (const auto& [e, c] : terms_) {
        LaurentPoly t = LaurentPoly::constant(rctx, nd, c);
        for (int i = 0; i < d_; ++i)
            if (e[static_cast<size_t>(i)] != 0) t = t * power(i, e[static_cast<size_t>(i)]);
        r = r + t;
    }
    return r;
}

}  // namespace prism
