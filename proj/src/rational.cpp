#include "bv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
        mpq_clear(q_);
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
        mpq_clear(q_);
        throw std::domain_error("Rational: zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("Rational::to_long on non-integer " + str());
    if (!mpz_fits_slong_p(mpq_numref(q_))) throw std::overflow_error("Rational::to_long overflow");
    return mpz_get_si(mpq_numref(q_));
}

long Rational::floor() const {
    mpz_t f;
    mpz_init(f);
    mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
    if (!mpz_fits_slong_p(f)) {
        mpz_clear(f);
        throw std::overflow_error("Rational::floor overflow");
    }
    long r = mpz_get_si(f);
    mpz_clear(f);
    return r;
}

long Rational::ceil() const {
    mpz_t c;
    mpz_init(c);
    mpz_cdiv_q(c, mpq_numref(q_), mpq_denref(q_));
    if (!mpz_fits_slong_p(c)) {
        mpz_clear(c);
        throw std::overflow_error("Rational::ceil overflow");
    }
    long r = mpz_get_si(c);
    mpz_clear(c);
    return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return (Rational(1) / *this).pow(-e);
    Rational base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bv
