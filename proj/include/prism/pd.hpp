#pragma once
// Divided-power (pd) polynomial algebras over a Laurent base.
//
// Elements are finite sums  sum_k c_k(T) * X^[k]  with c_k Laurent polynomials
// in the ordinary variables and X^[k] = prod X_i^[k_i] the divided-power basis,
// X^[a] X^[b] = prod C(a_i+b_i, a_i) X^[a+b].  A degree bound `bound` caps the
// retained pd weight; products that overflow drop the overflowing terms and set
// the `truncated` flag (tri-state bookkeeping: exact vs truncated results).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prism/laurent.hpp"

namespace prism {

class PdPoly {
public:
    using PdExp = std::vector<int>;  // exponents of the pd variables
    using TermMap = std::map<PdExp, LaurentPoly>;

    PdPoly() = default;
    PdPoly(Context ctx, int d, int npd, int bound)
        : ctx_(ctx), d_(d), npd_(npd), bound_(bound) {}

    static PdPoly zero(Context ctx, int d, int npd, int bound) {
        return PdPoly(ctx, d, npd, bound);
    }
    static PdPoly one(Context ctx, int d, int npd, int bound) {
        PdPoly f(ctx, d, npd, bound);
        f.add_term(PdExp(static_cast<size_t>(npd), 0), LaurentPoly::one(ctx, d));
        return f;
    }
    static PdPoly from_laurent(const LaurentPoly& c, int npd, int bound) {
        PdPoly f(c.ctx(), c.nvars(), npd, bound);
        f.add_term(PdExp(static_cast<size_t>(npd), 0), c);
        return f;
    }
    // The pd monomial c * X_var^[k].
    static PdPoly pd_monomial(Context ctx, int d, int npd, int bound, int var, int k,
                              const Int& c = 1) {
        PdPoly f(ctx, d, npd, bound);
        PdExp e(static_cast<size_t>(npd), 0);
        e[static_cast<size_t>(var)] = k;
        f.add_term(e, LaurentPoly::constant(ctx, d, c));
        return f;
    }

    const Context& ctx() const { return ctx_; }
    int d() const { return d_; }
    int npd() const { return npd_; }
    int bound() const { return bound_; }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly coefficient(const PdExp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? LaurentPoly::zero(ctx_, d_) : it->second;
    }
    long pd_degree() const {
        long m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, multi_abs(e));
        return m;
    }

    void add_term(const PdExp& e, const LaurentPoly& c) {
        if (static_cast<int>(e.size()) != npd_) throw Error("pd exponent arity mismatch");
        if (c.is_zero()) return;
        if (multi_abs(e) > bound_) {
            truncated_ = true;
            return;
        }
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PdPoly operator+(const PdPoly& o) const {
        PdPoly r(combine_ctx(ctx_, o.ctx_), check_shape(o), npd_, std::min(bound_, o.bound_));
        r.truncated_ = truncated_ || o.truncated_;
        for (const auto& [e, c] : terms_) r.add_term(e, c.with_prec(r.ctx_.prec));
        for (const auto& [e, c] : o.terms_) r.add_term(e, c.with_prec(r.ctx_.prec));
        return r;
    }
    PdPoly operator-() const {
        PdPoly r(ctx_, d_, npd_, bound_);
        r.truncated_ = truncated_;
        for (const auto& [e, c] : terms_) r.add_term(e, -c);
        return r;
    }
    PdPoly operator-(const PdPoly& o) const { return *this + (-o); }

    PdPoly operator*(const PdPoly& o) const {
        PdPoly r(combine_ctx(ctx_, o.ctx_), check_shape(o), npd_, std::min(bound_, o.bound_));
        r.truncated_ = truncated_ || o.truncated_;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                PdExp e = multi_add(e1, e2);
                if (multi_abs(e) > r.bound_) {
                    r.truncated_ = true;
                    continue;
                }
                r.add_term(e, (c1 * c2).scaled(pd_structure_constant(e1, e2)));
            }
        return r;
    }

    PdPoly scaled(const Int& c) const {
        PdPoly r(ctx_, d_, npd_, bound_);
        r.truncated_ = truncated_;
        for (const auto& [e, k] : terms_) r.add_term(e, k.scaled(c));
        return r;
    }
    PdPoly times_laurent(const LaurentPoly& f) const {
        PdPoly r(combine_ctx(ctx_, f.ctx()), d_, npd_, bound_);
        r.truncated_ = truncated_;
        for (const auto& [e, k] : terms_) r.add_term(e, k * f);
        return r;
    }

    PdPoly pow(long n) const {
        if (n < 0) throw Error("PdPoly::pow: negative exponent; use invert");
        PdPoly r = one(ctx_, d_, npd_, bound_);
        PdPoly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const PdPoly& o) const {
        return d_ == o.d_ && npd_ == o.npd_ && ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool equals_mod(const PdPoly& o) const { return (*this - o).is_zero(); }

    PdPoly exact_div_p(long k) const {
        PdPoly r(Context{ctx_.p, ctx_.exact() ? 0 : ctx_.prec - static_cast<int>(k)}, d_, npd_,
                 bound_);
        if (!ctx_.exact() && r.ctx_.prec <= 0)
            throw PrecisionExhausted("PdPoly::exact_div_p at precision " +
                                     std::to_string(ctx_.prec));
        r.truncated_ = truncated_;
        for (const auto& [e, c] : terms_) r.add_term(e, c.exact_div_p(k));
        return r;
    }
    PdPoly exact_div_int(const Int& m) const {
        PdPoly r(ctx_, d_, npd_, bound_);
        r.truncated_ = truncated_;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            LaurentPoly q = c.exact_div_int(m);
            if (first) {
                r.ctx_ = q.ctx();
                first = false;
            }
            r.add_term(e, q);
        }
        if (!ctx_.exact() && !first) {
            // reduce stored coefficients uniformly to the (possibly lowered) precision
            PdPoly s(r.ctx_, d_, npd_, bound_);
            s.truncated_ = r.truncated_;
            for (const auto& [e, c] : r.terms_) s.add_term(e, c.with_prec(r.ctx_.prec));
            return s;
        }
        return r;
    }

    PdPoly with_prec(int newprec) const {
        PdPoly r(Context{ctx_.p, newprec}, d_, npd_, bound_);
        r.truncated_ = truncated_;
        for (const auto& [e, c] : terms_) r.add_term(e, c.with_prec(newprec));
        return r;
    }
    PdPoly with_bound(int newbound) const {
        PdPoly r(ctx_, d_, npd_, newbound);
        r.truncated_ = truncated_;
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    // pd-derivative with respect to pd variable `var`: X^[k] -> X^[k-1].
    PdPoly pd_derivative(int var) const {
        PdPoly r(ctx_, d_, npd_, bound_);
        r.truncated_ = truncated_;
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<size_t>(var)] == 0) continue;
            PdExp e2 = e;
            e2[static_cast<size_t>(var)] -= 1;
            r.add_term(e2, c);
        }
        return r;
    }
    // Ordinary derivative with respect to Laurent variable `var`.
    PdPoly laurent_derivative(int var) const {
        PdPoly r(ctx_, d_, npd_, bound_);
        r.truncated_ = truncated_;
        for (const auto& [e, c] : terms_) r.add_term(e, c.derivative(var));
        return r;
    }

    // Inverse via geometric series.  The pd-degree-0 Laurent part must be a unit;
    // the remainder is topologically nilpotent (positive pd weight shifts beyond
    // the bound; p-multiples die at finite precision).
    PdPoly invert() const {
        PdExp z(static_cast<size_t>(npd_), 0);
        LaurentPoly u = coefficient(z);
        LaurentPoly uinv = u.invert();  // throws NotUnit if not invertible
        PdPoly w = times_laurent(uinv) - one(ctx_, d_, npd_, bound_);
        w.truncated_ = truncated_;
        PdPoly acc = one(ctx_, d_, npd_, bound_);
        PdPoly pw = one(ctx_, d_, npd_, bound_);
        int cap = bound_ + (ctx_.exact() ? 1 : ctx_.prec) + 2;
        for (int k = 1; k <= cap; ++k) {
            pw = pw * w;
            if (pw.is_zero()) break;
            if (k == cap) throw NotUnit("PdPoly::invert: series did not terminate");
            acc = (k % 2 ? acc - pw : acc + pw);
        }
        acc.truncated_ = acc.truncated_ || truncated_;
        return acc.times_laurent(uinv);
    }

private:
    Context ctx_;
    int d_ = 0, npd_ = 0, bound_ = 0;
    bool truncated_ = false;
    TermMap terms_;

    int check_shape(const PdPoly& o) const {
        if (d_ != o.d_ || npd_ != o.npd_) throw Error("pd shape mismatch");
        return d_;
    }
};

// ---------------------------------------------------------------------------
// Substitution.  Ordinary variables map to unit elements of the target algebra
// (negative exponents go through invert); pd variables map to signed sums of
// target pd variables, or to zero, expanded with the pd binomial law
// (a+b)^[n] = sum a^[i] b^[n-i], (-a)^[k] = (-1)^k a^[k].
// ---------------------------------------------------------------------------

struct PdSubstitution {
    struct PdImage {
        // list of (sign, target pd variable index); empty list = image 0
        std::vector<std::pair<int, int>> summands;
    };
    Context tctx;
    int td = 0, tnpd = 0, tbound = 0;
    std::vector<PdPoly> laurent_images;  // size = source d
    std::vector<PdImage> pd_images;      // size = source npd
};

inline PdPoly pd_substitute(const PdPoly& f, const PdSubstitution& s) {
    if (static_cast<int>(s.laurent_images.size()) != f.d() ||
        static_cast<int>(s.pd_images.size()) != f.npd())
        throw UnsupportedSubstitution("pd_substitute: image count mismatch");
    Context rctx = s.tctx;
    PdPoly result = PdPoly::zero(rctx, s.td, s.tnpd, s.tbound);
    if (f.truncated()) result.mark_truncated();

    // Image of X_var^[k], via compositions of k into the summands.
    auto pd_power_image = [&](int var, int k) -> PdPoly {
        const auto& sm = s.pd_images[static_cast<size_t>(var)].summands;
        if (k == 0) return PdPoly::one(rctx, s.td, s.tnpd, s.tbound);
        if (sm.empty()) return PdPoly::zero(rctx, s.td, s.tnpd, s.tbound);
        PdPoly acc = PdPoly::zero(rctx, s.td, s.tnpd, s.tbound);
        // enumerate compositions k = k_1 + ... + k_s
        std::vector<int> parts(sm.size(), 0);
        struct Rec {
            const PdSubstitution* s;
            const std::vector<std::pair<int, int>>* sm;
            Context rctx;
            PdPoly* acc;
            void go(std::vector<int>& parts, size_t pos, int rem) {
                if (pos + 1 == sm->size()) {
                    parts[pos] = rem;
                    PdPoly t = PdPoly::one(rctx, s->td, s->tnpd, s->tbound);
                    for (size_t j = 0; j < sm->size(); ++j) {
                        if (parts[j] == 0) continue;
                        Int sign = ((*sm)[j].first < 0 && parts[j] % 2) ? -1 : 1;
                        t = t * PdPoly::pd_monomial(rctx, s->td, s->tnpd, s->tbound,
                                                    (*sm)[j].second, parts[j], sign);
                    }
                    *acc = *acc + t;
                    return;
                }
                for (int kk = 0; kk <= rem; ++kk) {
                    parts[pos] = kk;
                    go(parts, pos + 1, rem - kk);
                }
            }
        } rec{&s, &sm, rctx, &acc};
        rec.go(parts, 0, k);
        return acc;
    };

    // Cache of powers of ordinary-variable images.
    std::vector<std::map<int, PdPoly>> lcache(static_cast<size_t>(f.d()));
    auto lpower = [&](int var, int e) -> const PdPoly& {
        auto& c = lcache[static_cast<size_t>(var)];
        auto it = c.find(e);
        if (it != c.end()) return it->second;
        PdPoly val = (e == 0)   ? PdPoly::one(rctx, s.td, s.tnpd, s.tbound)
                     : (e > 0) ? s.laurent_images[static_cast<size_t>(var)].pow(e)
                               : s.laurent_images[static_cast<size_t>(var)].invert().pow(-e);
        return c.emplace(e, std::move(val)).first->second;
    };

    for (const auto& [pdexp, coeff] : f.terms()) {
        // coefficient: substitute the Laurent part monomial by monomial
        for (const auto& [lexp, c] : coeff.terms()) {
            PdPoly t = PdPoly::from_laurent(LaurentPoly::constant(rctx, s.td, c), s.tnpd,
                                            s.tbound);
            for (int i = 0; i < f.d(); ++i)
                if (lexp[static_cast<size_t>(i)] != 0) t = t * lpower(i, lexp[static_cast<size_t>(i)]);
            for (int j = 0; j < f.npd(); ++j)
                if (pdexp[static_cast<size_t>(j)] != 0)
                    t = t * pd_power_image(j, pdexp[static_cast<size_t>(j)]);
            result = result + t;
        }
    }
    return result;
}

}  // namespace prism
