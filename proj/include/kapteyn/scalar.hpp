#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>

#include "kapteyn/combinatorics.hpp"
#include "kapteyn/rational.hpp"

namespace kapteyn
{

/// The two scalar fields the coefficient transforms run over: exact
/// rationals (integer orders only) and double precision (any real order).
template <class S>
concept CoeffScalar = std::same_as<S, Rational> || std::same_as<S, double>;

namespace detail
{

inline void require_order(const Rational& x, const char* what)
{
    if (x.sign() < 0)
        throw DomainError(std::string(what) + " must be nonnegative, got " + x.str());
    if (!x.is_integer())
        throw DomainError(std::string(what) + " must be an integer in exact mode, got " + x.str());
}

inline void require_order(double x, const char* what)
{
    if (!std::isfinite(x) || x < 0)
        throw DomainError(std::string(what) + " must be a finite nonnegative real, got " + std::to_string(x));
}

// Gamma at a positive argument. Exact mode only sees positive integers.
inline Rational gamma_fn(const Rational& x)
{
    if (!x.is_integer() || x.sign() <= 0)
        throw DomainError("exact Gamma needs a positive integer argument, got " + x.str());
    return Rational(factorial(static_cast<std::uint64_t>(x.to_int64() - 1)));
}

inline double gamma_fn(double x) { return std::tgamma(x); }

// base^exponent with 0^0 = 1.
inline Rational power(const Rational& base, const Rational& exponent)
{
    if (!exponent.is_integer())
        throw DomainError("exact power needs an integer exponent, got " + exponent.str());
    return pow(base, exponent.to_int64());
}

inline double power(double base, double exponent) { return std::pow(base, exponent); }

inline Rational gen_binomial(const Rational& top, std::uint64_t k) { return binomial(top, k); }

inline double gen_binomial(double top, std::uint64_t k)
{
    double r = 1.0;
    for (std::uint64_t i = 1; i <= k; ++i)
        r *= (top - static_cast<double>(k - i)) / static_cast<double>(i);
    return r;
}

template <CoeffScalar S>
S finite_or_throw(S value, const char* what)
{
    if constexpr (std::same_as<S, double>) {
        if (!std::isfinite(value))
            throw DomainError(std::string(what) + ": floating overflow (index too large for double mode)");
    }
    return value;
}

} // namespace detail
} // namespace kapteyn
