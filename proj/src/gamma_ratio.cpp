#include "bv/gamma_ratio.hpp"

namespace bv {

NilPoly NilPoly::symbol(int s, const Rational& coeff) {
    NilPoly p;
    if (!coeff.is_zero()) {
        ExpVec e{0, 0, 0, 0};
        e[s] = 1;
        p.terms_[e] = coeff;
    }
    return p;
}

Rational NilPoly::constant_term() const {
    auto it = terms_.find(ExpVec{0, 0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

void NilPoly::set(const ExpVec& e, const Rational& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

NilPoly NilPoly::add(const NilPoly& o) const {
    NilPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NilPoly NilPoly::mul(const NilPoly& o, const NilpotencyMap& caps) const {
    NilPoly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e;
            bool keep = true;
            for (int i = 0; i < kMaxSymbols; ++i) {
                unsigned s = unsigned(ea[i]) + unsigned(eb[i]);
                if (s >= caps[i]) {
                    keep = false;
                    break;
                }
                e[i] = (uint8_t)s;
            }
            if (!keep) continue;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Rational v = ca * cb;
                if (!v.is_zero()) r.terms_[e] = v;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

NilPoly NilPoly::scale(const Rational& c) const {
    NilPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

int NilPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, v] : terms_) {
        int t = e[0] + e[1] + e[2] + e[3];
        if (t > d) d = t;
    }
    return d;
}

NilPoly NilPoly::inverse(const NilpotencyMap& caps) const {
    Rational c0 = constant_term();
    if (c0.is_zero()) throw ZeroDivision("NilPoly::inverse: zero constant term");
    // (c0 + N)^-1 = c0^-1 sum_j (-N/c0)^j, N nilpotent under the caps
    NilPoly n = add(NilPoly(c0).scale(Rational(-1))).scale(Rational(-1) / c0);
    int bound = 0;
    for (int i = 0; i < kMaxSymbols; ++i) bound += (caps[i] == 255 ? total_degree() : caps[i] - 1);
    NilPoly acc(Rational(1)), power(Rational(1));
    for (int j = 1; j <= bound; ++j) {
        power = power.mul(n, caps);
        if (power.is_zero()) break;
        acc = acc.add(power);
    }
    return acc.scale(Rational(1) / c0);
}

MPComplex NilPoly::eval(const std::vector<MPComplex>& subs, mpfr_prec_t prec) const {
    MPComplex acc(prec);
    for (const auto& [e, c] : terms_) {
        MPComplex t(c, prec);
        for (int i = 0; i < kMaxSymbols; ++i)
            for (int j = 0; j < e[i]; ++j) t *= subs.at(i);
        acc += t;
    }
    return acc;
}

namespace {

NilPoly linear_poly(const LinearForm& L, const Rational& c) {
    NilPoly p(c);
    for (int i = 0; i < kMaxSymbols; ++i)
        if (!L.coeff[i].is_zero()) p = p.add(NilPoly::symbol(i, L.coeff[i]));
    return p;
}

}  // namespace

NilPoly pochhammer_collapse(const GammaRatioForm& form, const NilpotencyMap& caps) {
    NilPoly acc(Rational(1));
    for (const auto& f : form.factors) {
        if (!f.shift.is_integer())
            throw NonIntegralShift("pochhammer_collapse: shift " + f.shift.str());
        long n = f.shift.to_long();
        // Gamma(L+o+n)/Gamma(L+o) as a product of linear factors.
        NilPoly prod(Rational(1));
        bool invert_block = false;
        if (n >= 0) {
            for (long j = 0; j < n; ++j)
                prod = prod.mul(linear_poly(f.form, f.offset + Rational(j)), caps);
        } else {
            invert_block = true;
            for (long j = 1; j <= -n; ++j)
                prod = prod.mul(linear_poly(f.form, f.offset - Rational(j)), caps);
        }
        if (f.sign < 0) invert_block = !invert_block;
        if (invert_block) {
            if (prod.constant_term().is_zero())
                throw ZeroDivision("pochhammer_collapse: factor with zero constant part");
            prod = prod.inverse(caps);
        }
        acc = acc.mul(prod, caps);
    }
    return acc;
}

MPComplex eval_gamma_ratio(const GammaRatioForm& form, const std::vector<MPComplex>& subs,
                           mpfr_prec_t prec) {
    MPComplex acc(1, prec);
    for (const auto& f : form.factors) {
        MPComplex L(prec);
        for (int i = 0; i < kMaxSymbols; ++i)
            if (!f.form.coeff[i].is_zero()) L += MPComplex(f.form.coeff[i], prec) * subs.at(i);
        MPComplex num = mp_gamma(L + MPComplex(f.offset + f.shift, prec));
        MPComplex den = mp_gamma(L + MPComplex(f.offset, prec));
        MPComplex r = num / den;
        if (f.sign < 0) r = MPComplex(1, prec) / r;
        acc *= r;
    }
    return acc;
}

}  // namespace bv
