#include "bv/mp_float.hpp"

#include <algorithm>
#include <stdexcept>

namespace bv {

namespace {
mpfr_prec_t join(const MPFloat& a, const MPFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

MPFloat& MPFloat::operator=(const MPFloat& o) {
    if (this != &o) {
        if (prec_ != o.prec_) {
            mpfr_set_prec(f_, o.prec_);
            prec_ = o.prec_;
        }
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    return *this;
}

MPFloat operator+(const MPFloat& a, const MPFloat& b) {
    MPFloat r(join(a, b));
    mpfr_add(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
MPFloat operator-(const MPFloat& a, const MPFloat& b) {
    MPFloat r(join(a, b));
    mpfr_sub(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
MPFloat operator*(const MPFloat& a, const MPFloat& b) {
    MPFloat r(join(a, b));
    mpfr_mul(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
MPFloat operator/(const MPFloat& a, const MPFloat& b) {
    MPFloat r(join(a, b));
    mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
}
MPFloat MPFloat::operator-() const {
    MPFloat r(prec_);
    mpfr_neg(r.f_, f_, MPFR_RNDN);
    return r;
}

#define BV_UNARY(name, fn)            \
    MPFloat MPFloat::name() const {   \
        MPFloat r(prec_);             \
        fn(r.f_, f_, MPFR_RNDN);      \
        return r;                     \
    }
BV_UNARY(abs, mpfr_abs)
BV_UNARY(sqrt, mpfr_sqrt)
BV_UNARY(exp, mpfr_exp)
BV_UNARY(log, mpfr_log)
BV_UNARY(sin, mpfr_sin)
BV_UNARY(cos, mpfr_cos)
BV_UNARY(atan, mpfr_atan)
#undef BV_UNARY

MPFloat MPFloat::pow(const MPFloat& e) const {
    MPFloat r(std::max(prec_, e.prec_));
    mpfr_pow(r.f_, f_, e.f_, MPFR_RNDN);
    return r;
}

MPFloat MPFloat::pow_si(long e) const {
    MPFloat r(prec_);
    mpfr_pow_si(r.f_, f_, e, MPFR_RNDN);
    return r;
}

MPFloat MPFloat::gamma() const {
    if (mpfr_integer_p(f_) && mpfr_sgn(f_) <= 0)
        throw PoleAtNonPositiveInteger("gamma pole at " + str(8));
    MPFloat r(prec_);
    mpfr_gamma(r.f_, f_, MPFR_RNDN);
    return r;
}

MPFloat MPFloat::pi(mpfr_prec_t prec) {
    MPFloat r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
MPFloat MPFloat::euler_gamma(mpfr_prec_t prec) {
    MPFloat r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
MPFloat MPFloat::ln2(mpfr_prec_t prec) {
    MPFloat r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}
MPFloat MPFloat::pow2(long e, mpfr_prec_t prec) {
    MPFloat r(1L, prec);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

std::string MPFloat::str(size_t digits) const {
    char fmt[32];
    snprintf(fmt, sizeof(fmt), "%%.%zuRg", digits);
    char* s = nullptr;
    if (mpfr_asprintf(&s, fmt, f_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace bv
