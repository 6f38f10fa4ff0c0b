#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "kapteyn/errors.hpp"

namespace kapteyn
{

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction of arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator; zero is 0/1.
/// Serializes as "p/q", or "p" when q = 1.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : m_value(v) {}
    Rational(long v) : m_value(v) {}
    Rational(long long v) : m_value(v) {}
    Rational(unsigned v) : m_value(v) {}
    Rational(unsigned long v) : m_value(v) {}
    Rational(unsigned long long v) : m_value(v) {}
    Rational(const Integer& v) : m_value(v) {}

    Rational(const Integer& num, const Integer& den)
    {
        if (den == 0)
            throw DomainError("Rational: zero denominator");
        if (den < 0)
            m_value = boost::multiprecision::cpp_rational(Integer(-num), Integer(-den));
        else
            m_value = boost::multiprecision::cpp_rational(num, den);
    }

    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            return s;
        };
        auto parse_int = [](std::string_view s) {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i == s.size())
                throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
            for (std::size_t j = i; j < s.size(); ++j)
                if (s[j] < '0' || s[j] > '9')
                    throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
            if (s[0] == '+')
                s.remove_prefix(1);
            return Integer(std::string(s));
        };

        text = trim(text);
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        const Integer den = parse_int(trim(text.substr(slash + 1)));
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(trim(text.substr(0, slash))), den);
    }

    Integer num() const { return boost::multiprecision::numerator(m_value); }
    Integer den() const { return boost::multiprecision::denominator(m_value); }

    bool is_zero() const { return m_value == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return m_value.sign(); }

    std::string str() const
    {
        const Integer d = den();
        if (d == 1)
            return num().str();
        return num().str() + "/" + d.str();
    }

    double to_double() const { return m_value.convert_to<double>(); }

    // Only meaningful when is_integer(); throws otherwise or on overflow.
    long long to_int64() const
    {
        if (!is_integer())
            throw DomainError("Rational: " + str() + " is not an integer");
        const Integer n = num();
        if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN))
            throw DomainError("Rational: " + str() + " does not fit in 64 bits");
        return n.convert_to<long long>();
    }

    Rational operator-() const { return Rational(Raw{}, -m_value); }

    Rational& operator+=(const Rational& o) { m_value += o.m_value; return *this; }
    Rational& operator-=(const Rational& o) { m_value -= o.m_value; return *this; }
    Rational& operator*=(const Rational& o) { m_value *= o.m_value; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw DomainError("Rational: division by zero");
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.m_value < b.m_value)
            return std::strong_ordering::less;
        if (a.m_value > b.m_value)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct Raw {};
    Rational(Raw, boost::multiprecision::cpp_rational v) : m_value(std::move(v)) {}

    boost::multiprecision::cpp_rational m_value;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Integer power; 0^0 = 1, negative exponents invert (0^-k throws).
inline Rational pow(const Rational& base, long long exponent)
{
    if (exponent < 0)
        return Rational(1) / pow(base, -exponent);
    Rational result(1);
    Rational b = base;
    auto e = static_cast<unsigned long long>(exponent);
    while (e != 0) {
        if (e & 1u)
            result *= b;
        e >>= 1;
        if (e != 0)
            b *= b;
    }
    return result;
}

} // namespace kapteyn
