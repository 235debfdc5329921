#pragma once
/// Quantum integers [n] = (q^n - q^{-n})/(q - q^{-1}) and their factorials,
/// in three flavors: Laurent polynomials in s (q = s^2), univariate rational
/// functions, and exact cyclotomic values at a chosen root q.

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// [n] as a Laurent polynomial in s with q = s^2 (so [2] = s^2 + s^{-2}).
inline Laurent qint_laurent(long n) {
    if (n < 0) return -qint_laurent(-n);
    Laurent p;
    for (long j = 0; j < n; ++j) p += Laurent::var_pow(VAR_S, int32_t(2 * (n - 1 - 2 * j)));
    return p;
}

/// [n] in a univariate rational-function ring where q = x^scale
/// (scale = 2 when x plays the role of s, scale = 1 when x is q itself).
inline RatFunc qint_rf(long n, int scale = 2) {
    if (n < 0) return -qint_rf(-n, scale);
    RatFunc p;
    for (long j = 0; j < n; ++j) p += RatFunc::x_pow(scale * (n - 1 - 2 * j));
    return p;
}

/// [n] evaluated exactly at a cyclotomic q.
inline Cyclo qint_at(const Cyclo& q, long n) {
    Cyclo acc = Cyclo::zero(q.field());
    bool neg = n < 0;
    if (neg) n = -n;
    for (long j = 0; j < n; ++j) acc += q.pow(n - 1 - 2 * j);
    if (neg) acc.negate();
    return acc;
}

/// [n]! = [n][n-1]...[1] at a cyclotomic q (requires n >= 0).
inline Cyclo qfact_at(const Cyclo& q, long n) {
    if (n < 0) throw std::domain_error("quantum factorial of negative integer");
    Cyclo acc = Cyclo::one(q.field());
    for (long j = 2; j <= n; ++j) acc *= qint_at(q, j);
    return acc;
}

inline RatFunc qfact_rf(long n, int scale = 2) {
    if (n < 0) throw std::domain_error("quantum factorial of negative integer");
    RatFunc acc = RatFunc::from_int(1);
    for (long j = 2; j <= n; ++j) acc *= qint_rf(j, scale);
    return acc;
}

}  // namespace skein
