#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bv/mp_complex.hpp"
#include "bv/rational.hpp"

namespace bv {

struct NonIntegralShift : std::domain_error {
    explicit NonIntegralShift(const std::string& w) : std::domain_error(w) {}
};
struct ZeroDivision : std::domain_error {
    explicit ZeroDivision(const std::string& w) : std::domain_error(w) {}
};

constexpr int kMaxSymbols = 4;
using ExpVec = std::array<uint8_t, kMaxSymbols>;
using NilpotencyMap = std::array<uint8_t, kMaxSymbols>;  // exclusive power caps

inline NilpotencyMap no_truncation() { return {255, 255, 255, 255}; }

// Polynomial in up to four commuting nilpotent symbols with exact rational
// coefficients. Multiplication truncates against the supplied caps.
class NilPoly {
public:
    NilPoly() = default;
    explicit NilPoly(const Rational& c) {
        if (!c.is_zero()) terms_[ExpVec{0, 0, 0, 0}] = c;
    }
    static NilPoly symbol(int s, const Rational& coeff = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    void set(const ExpVec& e, const Rational& c);

    NilPoly add(const NilPoly& o) const;
    NilPoly mul(const NilPoly& o, const NilpotencyMap& caps) const;
    NilPoly scale(const Rational& c) const;
    // Multiplicative inverse; requires a nonzero constant term.
    NilPoly inverse(const NilpotencyMap& caps) const;

    int total_degree() const;
    MPComplex eval(const std::vector<MPComplex>& subs, mpfr_prec_t prec) const;

    bool operator==(const NilPoly& o) const { return terms_ == o.terms_; }

private:
    std::map<ExpVec, Rational> terms_;
};

// Linear form over divisor symbols: sum of coeff * symbol.
struct LinearForm {
    std::array<Rational, kMaxSymbols> coeff{};
    bool is_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const LinearForm& o) const {
        for (int i = 0; i < kMaxSymbols; ++i)
            if (!(coeff[i] == o.coeff[i])) return false;
        return true;
    }
};

// One ratio Gamma(L + offset + shift)^sign / Gamma(L + offset)^sign.
struct GammaRatioFactor {
    LinearForm form;
    Rational offset;
    Rational shift;
    int sign = +1;
};

// Product of Gamma ratios that collapses to a finite Pochhammer product once
// every shift is integral.
struct GammaRatioForm {
    std::vector<GammaRatioFactor> factors;

    void push(LinearForm L, Rational offset, Rational shift, int sign = +1) {
        factors.push_back({std::move(L), std::move(offset), std::move(shift), sign});
    }
};

// Collapse to an exact polynomial in the symbols, truncated by `caps`.
// Throws NonIntegralShift / ZeroDivision per the arith contract.
NilPoly pochhammer_collapse(const GammaRatioForm& form, const NilpotencyMap& caps);

// Direct multi-precision evaluation of the same product of Gamma ratios at a
// numeric substitution for the symbols (the cross-check oracle).
MPComplex eval_gamma_ratio(const GammaRatioForm& form, const std::vector<MPComplex>& subs,
                           mpfr_prec_t prec);

}  // namespace bv
