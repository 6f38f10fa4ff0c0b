#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kapteyn/combinatorics.hpp"
#include "kapteyn/polynomial.hpp"
#include "kapteyn/rational.hpp"

namespace kapteyn
{

/// Truncated formal power series: the first order() Maclaurin coefficients.
///
/// Index j holds [t^j]. Unlike Polynomial, zeros are not trimmed; the length
/// is the truncation order and is part of the value.
class TruncSeries
{
public:
    TruncSeries() = default;
    explicit TruncSeries(std::size_t order) : m_coeffs(order) {}
    TruncSeries(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs)) {}

    static TruncSeries one(std::size_t order)
    {
        TruncSeries s(order);
        if (order > 0)
            s.m_coeffs[0] = 1;
        return s;
    }

    static TruncSeries from_polynomial(const Polynomial& p, std::size_t order)
    {
        TruncSeries s(order);
        for (std::size_t j = 0; j < order; ++j)
            s.m_coeffs[j] = p[j];
        return s;
    }

    std::size_t order() const { return m_coeffs.size(); }
    const std::vector<Rational>& coeffs() const { return m_coeffs; }
    const Rational& operator[](std::size_t j) const { return m_coeffs.at(j); }
    Rational& operator[](std::size_t j) { return m_coeffs.at(j); }

    TruncSeries truncated(std::size_t order) const
    {
        if (order > m_coeffs.size())
            throw DomainError("TruncSeries: cannot extend a series beyond its order");
        return TruncSeries(std::vector<Rational>(m_coeffs.begin(), m_coeffs.begin() + static_cast<long>(order)));
    }

    // Polynomial made of the retained coefficients.
    Polynomial to_polynomial() const { return Polynomial(m_coeffs); }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<Rational> m_coeffs;
};

/// Cauchy product truncated to the common order.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    if (a.order() != b.order())
        throw DomainError("series_mul: operands have different orders");
    const std::size_t n = a.order();
    TruncSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

inline TruncSeries series_add(const TruncSeries& a, const TruncSeries& b)
{
    if (a.order() != b.order())
        throw DomainError("series_add: operands have different orders");
    TruncSeries r = a;
    for (std::size_t i = 0; i < r.order(); ++i)
        r[i] += b[i];
    return r;
}

inline TruncSeries series_scale(const Rational& c, TruncSeries s)
{
    for (std::size_t i = 0; i < s.order(); ++i)
        s[i] *= c;
    return s;
}

/// base^s truncated to `order`, by binary powering.
inline TruncSeries series_pow(const TruncSeries& base, std::size_t s, std::size_t order)
{
    if (base.order() < order)
        throw DomainError("series_pow: base order below requested order");
    TruncSeries result = TruncSeries::one(order);
    TruncSeries b = base.truncated(order);
    while (s != 0) {
        if (s & 1u)
            result = series_mul(result, b);
        s >>= 1;
        if (s != 0)
            b = series_mul(b, b);
    }
    return result;
}

// Multiplicative inverse; requires a nonzero constant term.
inline TruncSeries series_inverse(const TruncSeries& a)
{
    const std::size_t n = a.order();
    if (n == 0)
        return a;
    if (a[0].is_zero())
        throw DomainError("series_inverse: zero constant term");
    TruncSeries r(n);
    r[0] = Rational(1) / a[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j)
            acc += a[j] * r[k - j];
        r[k] = -acc / a[0];
    }
    return r;
}

// The Euler operator t d/dt: coefficient j is multiplied by j.
inline TruncSeries series_theta(TruncSeries s)
{
    for (std::size_t j = 0; j < s.order(); ++j)
        s[j] *= Rational(j);
    return s;
}

/// sinh(t) = t + t^3/3! + ...
inline TruncSeries sinh_series(std::size_t order)
{
    TruncSeries s(order);
    for (std::size_t j = 1; j < order; j += 2)
        s[j] = Rational(Integer(1), factorial(j));
    return s;
}

/// sinh(t)/t = 1 + t^2/3! + t^4/5! + ...
inline TruncSeries sinh_over_t_series(std::size_t order)
{
    TruncSeries s(order);
    for (std::size_t j = 0; j < order; j += 2)
        s[j] = Rational(Integer(1), factorial(j + 1));
    return s;
}

/// (1 + c x^step)^alpha for rational alpha, truncated to `order` in x.
inline TruncSeries binomial_series(const Rational& alpha, const Rational& c, std::size_t step, std::size_t order)
{
    TruncSeries s(order);
    Rational cpow(1);
    for (std::size_t j = 0; j * step < order; ++j) {
        s[j * step] = binomial(alpha, j) * cpow;
        cpow *= c;
    }
    return s;
}

} // namespace kapteyn
