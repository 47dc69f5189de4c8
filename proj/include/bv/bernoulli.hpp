#pragma once

#include <vector>

#include "bv/rational.hpp"

namespace bv {

// Bernoulli number B_k with B_1 = -1/2.
const Rational& bernoulli_number(int k);

// Exact d-th Bernoulli polynomial B_d(x). d must stay at or below the
// configured cap (the twist-operator truncations never need more).
Rational bernoulli_polynomial(int d, const Rational& x, int max_degree = 32);

// Binomial coefficient as an exact rational (n choose k), n >= 0.
Rational binomial(long n, long k);

}  // namespace bv
