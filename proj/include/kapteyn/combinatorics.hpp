#pragma once

#include <cstdint>
#include <vector>

#include "kapteyn/rational.hpp"

namespace kapteyn
{

inline Integer factorial(std::uint64_t n)
{
    Integer r = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// C(n, k) for integers, zero outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Generalized binomial x(x-1)...(x-k+1)/k! with rational top.
inline Rational binomial(const Rational& x, std::uint64_t k)
{
    Rational r(1);
    for (std::uint64_t i = 0; i < k; ++i)
        r *= x - Rational(i);
    return r / Rational(factorial(k));
}

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
inline Rational pochhammer(const Rational& x, std::uint64_t n)
{
    Rational r(1);
    for (std::uint64_t i = 0; i < n; ++i)
        r *= x + Rational(i);
    return r;
}

} // namespace kapteyn
