#pragma once

#include <algorithm>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "kapteyn/rational.hpp"

namespace kapteyn
{

/// Dense univariate polynomial over Rational, coefficient index = degree.
///
/// Trailing zeros are always trimmed; the zero polynomial is the empty
/// sequence and has degree -1.
class Polynomial
{
public:
    Polynomial() = default;
    Polynomial(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : m_coeffs(coeffs) { trim(); }

    static Polynomial monomial(const Rational& c, std::size_t degree)
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    const std::vector<Rational>& coeffs() const { return m_coeffs; }
    long degree() const { return static_cast<long>(m_coeffs.size()) - 1; }
    bool is_zero() const { return m_coeffs.empty(); }

    // Coefficient of z^i, zero beyond the degree.
    Rational operator[](std::size_t i) const { return i < m_coeffs.size() ? m_coeffs[i] : Rational(0); }
    const Rational& leading() const { return m_coeffs.back(); }

    Polynomial derivative() const
    {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < m_coeffs.size(); ++i)
            d.push_back(m_coeffs[i] * Rational(i));
        return Polynomial(std::move(d));
    }

    // p(c z)
    Polynomial rescaled(const Rational& c) const
    {
        std::vector<Rational> v(m_coeffs);
        Rational f(1);
        for (auto& x : v) {
            x *= f;
            f *= c;
        }
        return Polynomial(std::move(v));
    }

    template <class T>
    T evaluate(const T& z) const
    {
        T acc(0);
        for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
            if constexpr (std::is_same_v<T, Rational>)
                acc = acc * z + *it;
            else
                acc = acc * z + it->to_double();
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.m_coeffs.size() > m_coeffs.size())
            m_coeffs.resize(o.m_coeffs.size());
        for (std::size_t i = 0; i < o.m_coeffs.size(); ++i)
            m_coeffs[i] += o.m_coeffs[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    Polynomial operator-() const
    {
        std::vector<Rational> v(m_coeffs);
        for (auto& x : v)
            x = -x;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> v(a.m_coeffs.size() + b.m_coeffs.size() - 1);
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j)
                v[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p)
    {
        std::vector<Rational> v(p.m_coeffs);
        for (auto& x : v)
            x *= c;
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const
    {
        if (divisor.is_zero())
            throw DomainError("Polynomial: division by the zero polynomial");
        std::vector<Rational> rem(m_coeffs);
        const long dd = divisor.degree();
        if (degree() < dd)
            return {Polynomial{}, *this};
        std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
        for (long i = degree() - dd; i >= 0; --i) {
            const Rational q = rem[static_cast<std::size_t>(i + dd)] / divisor.leading();
            quot[static_cast<std::size_t>(i)] = q;
            if (q.is_zero())
                continue;
            for (long j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i + j)] -= q * divisor.m_coeffs[static_cast<std::size_t>(j)];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial exact_divide(const Polynomial& divisor) const
    {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero())
            throw InexactDivision("Polynomial: nonzero remainder in exact division");
        return q;
    }

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back().is_zero())
            m_coeffs.pop_back();
    }

    std::vector<Rational> m_coeffs;
};

/// Splits p into content * primitive, where primitive has coprime integer
/// coefficients and a positive leading coefficient.
inline std::pair<Rational, Polynomial> primitive_part(const Polynomial& p)
{
    if (p.is_zero())
        return {Rational(0), Polynomial{}};
    Integer g = 0;
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero())
            continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c.num()));
        l = boost::multiprecision::lcm(l, c.den());
    }
    Rational content(g, l);
    if (p.leading().sign() < 0)
        content = -content;
    return {content, (Rational(1) / content) * p};
}

} // namespace kapteyn
