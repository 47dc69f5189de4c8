#include "bv/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace bv {

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long j = 0; j < k; ++j) r = r * Rational(n - j) / Rational(j + 1);
    return r;
}

const Rational& bernoulli_number(int k) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while ((int)cache.size() <= k) {
        int m = (int)cache.size();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational s(0);
        for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * cache[j];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[k];
}

Rational bernoulli_polynomial(int d, const Rational& x, int max_degree) {
    if (d < 0) throw std::invalid_argument("bernoulli_polynomial: negative degree");
    if (d > max_degree) throw std::invalid_argument("bernoulli_polynomial: degree above cap");
    Rational s(0);
    Rational xp(1);  // x^(d-k) accumulated from the top
    // B_d(x) = sum_k C(d,k) B_k x^{d-k}; iterate k from d down so x powers build up.
    for (int k = d; k >= 0; --k) {
        s += binomial(d, k) * bernoulli_number(k) * xp;
        if (k > 0) xp *= x;
    }
    return s;
}

}  // namespace bv
