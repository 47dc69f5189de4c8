#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace bv {

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator (enforced by mpq canonicalization).
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const std::string& s);  // "p/q" or "p"
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    // Requires an integer value that fits in a long.
    long to_long() const;

    long floor() const;
    long ceil() const;
    // Fractional part <x> in [0, 1).
    Rational frac() const;

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Rational pow(long e) const;

    double to_double() const { return mpq_get_d(q_); }
    std::string str() const;  // "p/q", or "p" when the denominator is 1

    long num_long() const { return mpz_get_si(mpq_numref(q_)); }
    long den_long() const { return mpz_get_si(mpq_denref(q_)); }

    const mpq_t& raw() const { return q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    // Total order usable as a map key.
    friend int cmp(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_); }

private:
    mpq_t q_;
};

inline Rational frac_part(const Rational& x) { return x.frac(); }

// <<x>> = 1 - <1 - x>; equals <x> except at integers, where it is 1.
inline Rational dfrac(const Rational& x) { return Rational(1) - (Rational(1) - x).frac(); }

}  // namespace bv
