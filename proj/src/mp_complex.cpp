#include "bv/mp_complex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bv {

MPComplex operator/(const MPComplex& a, const MPComplex& b) {
    MPFloat d = b.re_ * b.re_ + b.im_ * b.im_;
    if (d.is_zero()) throw std::domain_error("MPComplex: division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

MPComplex MPComplex::exp() const {
    MPFloat ex = re_.exp();
    return {ex * im_.cos(), ex * im_.sin()};
}

MPComplex MPComplex::log() const {
    MPFloat r2 = abs2();
    if (r2.is_zero()) throw std::domain_error("MPComplex: log of zero");
    mpfr_prec_t p = prec();
    MPFloat half(Rational(1, 2), p);
    MPFloat arg(p);
    mpfr_atan2(arg.raw(), im_.raw(), re_.raw(), MPFR_RNDN);
    return {half * r2.log(), arg};
}

MPComplex MPComplex::sin() const {
    mpfr_prec_t p = prec();
    MPFloat ch(p), sh(p);
    mpfr_cosh(ch.raw(), im_.raw(), MPFR_RNDN);
    mpfr_sinh(sh.raw(), im_.raw(), MPFR_RNDN);
    return {re_.sin() * ch, re_.cos() * sh};
}

MPComplex MPComplex::pow(const MPComplex& e) const { return (e * log()).exp(); }

MPComplex MPComplex::pow_si(long e) const {
    if (e == 0) return MPComplex(1, prec());
    bool inv = e < 0;
    unsigned long n = inv ? -(unsigned long)e : (unsigned long)e;
    MPComplex base = *this, acc(1, prec());
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (inv) acc = MPComplex(1, prec()) / acc;
    return acc;
}

std::string MPComplex::str(size_t digits) const {
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + im_.abs().str(digits) + "i";
}

namespace {

struct SpougeTable {
    long a = 0;
    mpfr_prec_t prec = 0;
    std::vector<MPFloat> c;  // c[0] = sqrt(2*pi), c[k] for k = 1..a-1
};

// Coefficients are precision- and order-dependent; cached per thread.
const SpougeTable& spouge_table(mpfr_prec_t target_prec) {
    thread_local SpougeTable tab;
    // error bound a^{-1/2} (2*pi)^{-(a+1/2)} < 2^{-target-8}
    long a = static_cast<long>(std::ceil((double)(target_prec + 16) / 2.65)) + 4;
    mpfr_prec_t work = target_prec + 96;
    if (tab.a == a && tab.prec == work) return tab;
    tab.a = a;
    tab.prec = work;
    tab.c.assign(1, (MPFloat(2L, work) * MPFloat::pi(work)).sqrt());
    MPFloat kfac(1L, work);  // (k-1)!
    for (long k = 1; k < a; ++k) {
        if (k > 1) kfac *= MPFloat(k - 1, work);
        MPFloat amk(a - k, work);
        MPFloat term = amk.pow(MPFloat(Rational(2 * k - 1, 2), work)) * amk.exp() / kfac;
        if ((k - 1) % 2 == 1) term = -term;
        tab.c.push_back(term);
    }
    return tab;
}

// Spouge series for Gamma(z), valid for Re(z) >= 1/2.
MPComplex gamma_spouge(const MPComplex& z, mpfr_prec_t p) {
    const SpougeTable& tab = spouge_table(p);
    mpfr_prec_t w = tab.prec;
    MPComplex zm1(MPFloat(z.re(), w) - MPFloat(1L, w), MPFloat(z.im(), w));
    MPComplex sum(tab.c[0], MPFloat(w));
    for (long k = 1; k < tab.a; ++k)
        sum += MPComplex(tab.c[k], MPFloat(w)) / (zm1 + MPComplex(k, w));
    MPComplex base = zm1 + MPComplex(tab.a, w);
    MPComplex half(Rational(1, 2), w);
    return base.pow(zm1 + half) * (-base).exp() * sum;
}

}  // namespace

MPComplex mp_gamma(const MPComplex& z) {
    mpfr_prec_t p = z.prec() < MPFloat::kMinPrec ? MPFloat::kMinPrec : z.prec();
    if (z.im().is_zero()) {
        // Exact real path, including the pole check.
        MPFloat g = z.re().gamma();
        return {g, MPFloat(p)};
    }
    MPFloat half(Rational(1, 2), p);
    if (z.re() >= half) return gamma_spouge(z, p);
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    mpfr_prec_t w = p + 64;
    MPComplex zw(MPFloat(z.re(), w), MPFloat(z.im(), w));
    MPComplex pi_c(MPFloat::pi(w), MPFloat(w));
    MPComplex s = (pi_c * zw).sin();
    if (s.is_zero()) throw PoleAtNonPositiveInteger("gamma pole at " + z.str(8));
    return pi_c / (s * gamma_spouge(MPComplex(1, w) - zw, w));
}

MPFloat mp_gamma(const Rational& x, mpfr_prec_t prec) { return MPFloat(x, prec).gamma(); }

}  // namespace bv
