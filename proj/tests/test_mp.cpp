#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bv/mp_complex.hpp"

using bv::MPComplex;
using bv::MPFloat;
using bv::Rational;

namespace {
constexpr mpfr_prec_t P = 256;

MPFloat tol_bits(int bits) { return MPFloat::pow2(-bits, P); }
}  // namespace

TEST_CASE("gamma at simple rational points") {
    MPFloat g_half = bv::mp_gamma(Rational(1, 2), P);
    CHECK((g_half * g_half - MPFloat::pi(P)).abs() < tol_bits(240));
    // Gamma(1/4) Gamma(3/4) = pi sqrt(2)
    MPFloat lhs = bv::mp_gamma(Rational(1, 4), P) * bv::mp_gamma(Rational(3, 4), P);
    MPFloat rhs = MPFloat::pi(P) * MPFloat(2L, P).sqrt();
    CHECK((lhs - rhs).abs() < tol_bits(240));
    CHECK_THROWS_AS(bv::mp_gamma(Rational(-3), P), bv::PoleAtNonPositiveInteger);
}

TEST_CASE("complex gamma matches real gamma on the real axis region") {
    MPComplex z(Rational(7, 3), P);
    MPComplex g = bv::mp_gamma(z);
    CHECK((g.re() - bv::mp_gamma(Rational(7, 3), P)).abs() < tol_bits(240));
    CHECK(g.im().abs() < tol_bits(240));
}

TEST_CASE("reflection identity on random rationals in (0,1)") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 100; ++i) {
        long den = 2 + (long)(rng() % 97);
        long num = 1 + (long)(rng() % (den - 1));
        Rational x(num, den);
        MPComplex zx(x, P);
        MPComplex prod = bv::mp_gamma(zx) * bv::mp_gamma(MPComplex(1, P) - zx);
        MPFloat pi = MPFloat::pi(P);
        MPFloat expect = pi / (MPFloat(x, P) * pi).sin();
        CHECK((prod.re() - expect).abs() < tol_bits(200) * expect.abs());
        CHECK(prod.im().abs() < tol_bits(200) * expect.abs());
    }
}

TEST_CASE("duplication identity Gamma(m/2)/Gamma(m) for m = 1..40") {
    for (long m = 1; m <= 40; ++m) {
        MPFloat lhs = bv::mp_gamma(Rational(m, 2), P) / bv::mp_gamma(Rational(m), P);
        MPFloat rhs = MPFloat(2L, P) * MPFloat::pi(P).sqrt() /
                      (MPFloat::pow2(m, P) * bv::mp_gamma(Rational(m, 2) + Rational(1, 2), P));
        CHECK((lhs - rhs).abs() < tol_bits(220) * lhs.abs());
    }
}

TEST_CASE("gamma residues: (x+m) Gamma(x) -> (-1)^m / m! as x -> -m") {
    MPFloat eps = MPFloat::pow2(-100, P);
    MPFloat fact(1L, P);
    for (long m = 0; m <= 10; ++m) {
        if (m > 0) fact *= MPFloat(m, P);
        MPComplex x(MPFloat(-m, P) + eps, MPFloat(P));
        MPComplex val = MPComplex(eps, MPFloat(P)) * bv::mp_gamma(x);
        MPFloat expect = MPFloat(1L, P) / fact;
        if (m % 2 == 1) expect = -expect;
        // first-order pole: error scales with eps
        CHECK((val.re() - expect).abs() < MPFloat::pow2(-90, P));
    }
}

TEST_CASE("complex gamma off axis against the recurrence") {
    MPComplex z(MPFloat(Rational(1, 3), P), MPFloat(Rational(5, 7), P));
    MPComplex lhs = bv::mp_gamma(z + MPComplex(1, P));
    MPComplex rhs = z * bv::mp_gamma(z);
    CHECK((lhs - rhs).abs() < tol_bits(220) * rhs.abs());
}

TEST_CASE("complex exp/log/pow consistency") {
    MPComplex z(MPFloat(Rational(3, 5), P), MPFloat(Rational(-2, 9), P));
    CHECK((z.log().exp() - z).abs() < tol_bits(240));
    MPComplex w = z.pow_si(3);
    CHECK((w - z * z * z).abs() < tol_bits(240));
}
