#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "bv/rational.hpp"

namespace bv {

// Multi-precision real. Precision is carried per value; binary operations
// take the larger operand precision. Minimum 64 bits.
class MPFloat {
public:
    static constexpr mpfr_prec_t kMinPrec = 64;

    explicit MPFloat(mpfr_prec_t prec = 128) : prec_(clamp(prec)) {
        mpfr_init2(f_, prec_);
        mpfr_set_zero(f_, 1);
    }
    MPFloat(long v, mpfr_prec_t prec) : prec_(clamp(prec)) {
        mpfr_init2(f_, prec_);
        mpfr_set_si(f_, v, MPFR_RNDN);
    }
    MPFloat(double v, mpfr_prec_t prec) : prec_(clamp(prec)) {
        mpfr_init2(f_, prec_);
        mpfr_set_d(f_, v, MPFR_RNDN);
    }
    MPFloat(const Rational& r, mpfr_prec_t prec) : prec_(clamp(prec)) {
        mpfr_init2(f_, prec_);
        mpfr_set_q(f_, r.raw(), MPFR_RNDN);
    }
    MPFloat(const MPFloat& o) : prec_(o.prec_) {
        mpfr_init2(f_, prec_);
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    // Copy at a different working precision.
    MPFloat(const MPFloat& o, mpfr_prec_t prec) : prec_(clamp(prec)) {
        mpfr_init2(f_, prec_);
        mpfr_set(f_, o.raw(), MPFR_RNDN);
    }
    MPFloat(MPFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(f_, prec_);
        mpfr_swap(f_, o.f_);
    }
    MPFloat& operator=(const MPFloat& o);
    MPFloat& operator=(MPFloat&& o) noexcept {
        mpfr_swap(f_, o.f_);
        std::swap(prec_, o.prec_);
        return *this;
    }
    ~MPFloat() { mpfr_clear(f_); }

    mpfr_prec_t prec() const { return prec_; }

    friend MPFloat operator+(const MPFloat& a, const MPFloat& b);
    friend MPFloat operator-(const MPFloat& a, const MPFloat& b);
    friend MPFloat operator*(const MPFloat& a, const MPFloat& b);
    friend MPFloat operator/(const MPFloat& a, const MPFloat& b);
    MPFloat operator-() const;

    MPFloat& operator+=(const MPFloat& o) { return *this = *this + o; }
    MPFloat& operator-=(const MPFloat& o) { return *this = *this - o; }
    MPFloat& operator*=(const MPFloat& o) { return *this = *this * o; }
    MPFloat& operator/=(const MPFloat& o) { return *this = *this / o; }

    friend bool operator<(const MPFloat& a, const MPFloat& b) {
        return mpfr_cmp(a.f_, b.f_) < 0;
    }
    friend bool operator>(const MPFloat& a, const MPFloat& b) { return b < a; }
    friend bool operator<=(const MPFloat& a, const MPFloat& b) { return !(b < a); }
    friend bool operator>=(const MPFloat& a, const MPFloat& b) { return !(a < b); }
    friend bool operator==(const MPFloat& a, const MPFloat& b) {
        return mpfr_cmp(a.f_, b.f_) == 0;
    }

    bool is_zero() const { return mpfr_zero_p(f_) != 0; }
    bool is_nan() const { return mpfr_nan_p(f_) != 0; }
    int sign() const { return mpfr_sgn(f_); }

    MPFloat abs() const;
    MPFloat sqrt() const;
    MPFloat exp() const;
    MPFloat log() const;
    MPFloat sin() const;
    MPFloat cos() const;
    MPFloat atan() const;
    MPFloat pow(const MPFloat& e) const;
    MPFloat pow_si(long e) const;

    // Real Gamma; throws PoleAtNonPositiveInteger on non-positive integers.
    MPFloat gamma() const;

    static MPFloat pi(mpfr_prec_t prec);
    static MPFloat euler_gamma(mpfr_prec_t prec);
    static MPFloat ln2(mpfr_prec_t prec);
    // 2^e as an MPFloat.
    static MPFloat pow2(long e, mpfr_prec_t prec);

    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
    std::string str(size_t digits = 50) const;

    mpfr_ptr raw() { return f_; }
    mpfr_srcptr raw() const { return f_; }

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
    mpfr_t f_;
    mpfr_prec_t prec_;
};

struct PoleAtNonPositiveInteger : std::domain_error {
    explicit PoleAtNonPositiveInteger(const std::string& what) : std::domain_error(what) {}
};

}  // namespace bv
