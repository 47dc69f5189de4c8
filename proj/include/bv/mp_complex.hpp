#pragma once

#include "bv/mp_float.hpp"

namespace bv {

// Multi-precision complex number built on MPFloat pairs. MPFR has no complex
// layer in this toolchain, so the transcendental functions needed for the
// contour work (exp, log, pow, sin, Gamma) are implemented here.
class MPComplex {
public:
    explicit MPComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
    MPComplex(MPFloat re, MPFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    MPComplex(long v, mpfr_prec_t prec) : re_(v, prec), im_(prec) {}
    MPComplex(const Rational& r, mpfr_prec_t prec) : re_(r, prec), im_(prec) {}

    const MPFloat& re() const { return re_; }
    const MPFloat& im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    friend MPComplex operator+(const MPComplex& a, const MPComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend MPComplex operator-(const MPComplex& a, const MPComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend MPComplex operator*(const MPComplex& a, const MPComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend MPComplex operator/(const MPComplex& a, const MPComplex& b);
    MPComplex operator-() const { return {-re_, -im_}; }

    MPComplex& operator+=(const MPComplex& o) { return *this = *this + o; }
    MPComplex& operator-=(const MPComplex& o) { return *this = *this - o; }
    MPComplex& operator*=(const MPComplex& o) { return *this = *this * o; }
    MPComplex& operator/=(const MPComplex& o) { return *this = *this / o; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_nan() const { return re_.is_nan() || im_.is_nan(); }

    MPComplex conj() const { return {re_, -im_}; }
    MPFloat abs() const { return (re_ * re_ + im_ * im_).sqrt(); }
    MPFloat abs2() const { return re_ * re_ + im_ * im_; }

    MPComplex exp() const;
    MPComplex log() const;  // principal branch
    MPComplex sin() const;
    // Principal-branch power a^b = exp(b log a).
    MPComplex pow(const MPComplex& e) const;
    MPComplex pow_si(long e) const;

    std::string str(size_t digits = 50) const;

private:
    MPFloat re_, im_;
};

// Gamma of a complex argument (Spouge series; reflection for Re z < 1/2).
// Relative error is kept below 2^(8 - prec) per the arith contract.
MPComplex mp_gamma(const MPComplex& z);
// Rational-argument convenience overload.
MPFloat mp_gamma(const Rational& x, mpfr_prec_t prec);

}  // namespace bv
