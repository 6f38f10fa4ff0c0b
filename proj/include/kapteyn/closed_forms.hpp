#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "kapteyn/combinatorics.hpp"
#include "kapteyn/polynomial.hpp"
#include "kapteyn/rational.hpp"
#include "kapteyn/series.hpp"

namespace kapteyn
{

enum class ClosedFormBase
{
    OneMinusZ,       // 1 - z
    OneMinusFourZSq, // 1 - 4 z^2
    OneMinusZSq      // 1 - z^2 (S1 family, variable a)
};

/// constant + prefactor * z^z_power * numerator(z) / base(z)^(exponent_num / exponent_den)
struct ClosedForm
{
    Rational constant;
    Rational prefactor;
    std::size_t z_power = 0;
    Polynomial numerator;
    ClosedFormBase base = ClosedFormBase::OneMinusZ;
    long exponent_num = 0;
    int exponent_den = 1;
    std::string variable = "z";

    Rational exponent() const { return Rational(exponent_num) / Rational(exponent_den); }

    Polynomial base_polynomial() const
    {
        switch (base) {
        case ClosedFormBase::OneMinusZ:
            return Polynomial{1, -1};
        case ClosedFormBase::OneMinusFourZSq:
            return Polynomial{1, 0, -4};
        case ClosedFormBase::OneMinusZSq:
            return Polynomial{1, 0, -1};
        }
        return {};
    }

    double evaluate(double z) const
    {
        const double base_value = base_polynomial().evaluate(z);
        if (!(base_value > 0))
            throw DomainError("ClosedForm::evaluate: argument outside the region where the base is positive");
        return constant.to_double() + prefactor.to_double() * std::pow(z, static_cast<double>(z_power)) *
                                          numerator.evaluate(z) /
                                          std::pow(base_value, static_cast<double>(exponent_num) / exponent_den);
    }

    /// First `order` Maclaurin coefficients, expanded exactly through the
    /// binomial series of base^(-exponent).
    TruncSeries taylor(std::size_t order) const
    {
        const Polynomial bp = base_polynomial();
        const std::size_t step = bp.degree() == 1 ? 1 : 2;
        TruncSeries inv = binomial_series(-exponent(), bp[step], step, order);
        TruncSeries num = TruncSeries::from_polynomial(
            prefactor * (Polynomial::monomial(Rational(1), z_power) * numerator), order);
        TruncSeries out = series_mul(num, inv);
        if (order > 0)
            out[0] += constant;
        return out;
    }

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// Upper bound on the family index accepted by the closed-form generators.
inline constexpr unsigned default_closed_form_bound = 12;

/// epsilon_{s,p}: 1 when s = p = 0, 1/2 otherwise.
inline Rational epsilon_sp(std::size_t s, std::size_t p)
{
    return (s == 0 && p == 0) ? Rational(1) : Rational(1, 2);
}

/// d^m/dt^m sinh(t)^r at t = 0, as m! [t^m] sinh(t)^r.
inline Rational sinh_power_derivative(std::size_t r, std::size_t m)
{
    const TruncSeries s = series_pow(sinh_series(m + 1), r, m + 1);
    return s[m] * Rational(factorial(m));
}

namespace detail
{

// [t^{2p}] (sinh(t)/t)^power, carried with 2p+2 guard terms whose odd
// coefficients must vanish.
inline Rational sinhc_power_coeff(std::size_t power, std::size_t p)
{
    const std::size_t order = 4 * p + 3;
    const TruncSeries s = series_pow(sinh_over_t_series(order), power, order);
    for (std::size_t j = 1; j < order; j += 2)
        if (!s[j].is_zero())
            throw std::logic_error("sinh(t)/t power has a nonzero odd coefficient");
    return s[2 * p];
}

// Coefficient of z^s in f_p with epsilon replaced by 1/2.
inline Rational half_first(std::size_t p, std::size_t s)
{
    return Rational(1, 2) * pochhammer(Rational(s + 1), 2 * p) * sinhc_power_coeff(s, p);
}

// Coefficient of z^{2s} in g_p with epsilon replaced by 1/2.
inline Rational half_second(std::size_t p, std::size_t s)
{
    const Integer s_fact = factorial(s);
    return Rational(1, 2) * Rational(factorial(2 * s + 2 * p), pow(Integer(4), static_cast<unsigned>(p)) * s_fact * s_fact) *
           sinhc_power_coeff(2 * s, p);
}

inline void require_bound(std::size_t p, unsigned bound, const char* what)
{
    if (p > bound)
        throw BoundExceeded(std::string(what) + ": index " + std::to_string(p) + " exceeds bound " +
                            std::to_string(bound));
}

inline constexpr std::size_t guard_window = 8;

// Multiplies the truncated series by base^exponent and checks that the
// coefficients past `cap` vanish through the guard window. Returns the
// numerator polynomial of degree <= cap.
inline Polynomial extract_numerator(const TruncSeries& series, const TruncSeries& base_power, std::size_t cap,
                                    const char* what)
{
    const TruncSeries product = series_mul(series, base_power);
    for (std::size_t j = cap + 1; j < product.order(); ++j)
        if (!product[j].is_zero())
            throw NonTerminating(std::string(what) + ": numerator does not terminate (coefficient " +
                                 std::to_string(j) + " is " + product[j].str() + ")");
    return product.truncated(cap + 1).to_polynomial();
}

// Writes constant + numerator / base^exponent into the normalized shape:
// numerator = prefactor * z^k * primitive polynomial.
inline ClosedForm normalize(Rational constant, const Polynomial& full, ClosedFormBase base, long exp_num, int exp_den,
                            std::string variable)
{
    ClosedForm cf;
    cf.constant = std::move(constant);
    cf.base = base;
    cf.exponent_num = exp_num;
    cf.exponent_den = exp_den;
    cf.variable = std::move(variable);
    if (full.is_zero()) {
        cf.prefactor = 0;
        return cf;
    }
    std::size_t k = 0;
    while (full[k].is_zero())
        ++k;
    const std::vector<Rational> shifted(full.coeffs().begin() + static_cast<long>(k), full.coeffs().end());
    auto [content, prim] = primitive_part(Polynomial(shifted));
    cf.prefactor = content;
    cf.z_power = k;
    cf.numerator = prim;
    return cf;
}

} // namespace detail

/// b_s(p) = eps_{s,p} (s+1)_{2p} [t^{2p}] (sinh(t)/t)^s, the Maclaurin
/// coefficients of f_p(z) = sum_n n^{2p} J_n(n z).
inline Rational b_first(std::size_t p, std::size_t s)
{
    return epsilon_sp(s, p) * pochhammer(Rational(s + 1), 2 * p) * detail::sinhc_power_coeff(s, p);
}

/// b_{2s}(p) = eps_{s,p} / (4^p (s!)^2) (2s+2p)! [t^{2p}] (sinh(t)/t)^{2s}, the
/// coefficients of z^{2s} in g_p(z) = sum_n n^{2p} J_n^2(2 n z).
inline Rational b_second(std::size_t p, std::size_t s)
{
    const Integer s_fact = factorial(s);
    return epsilon_sp(s, p) *
           Rational(factorial(2 * s + 2 * p), pow(Integer(4), static_cast<unsigned>(p)) * s_fact * s_fact) *
           detail::sinhc_power_coeff(2 * s, p);
}

/// f_p(z) = sum_n n^{2p} J_n(n z) as a rational function over (1-z)^{3p+1}.
///
/// The numerator comes from multiplying the exact Maclaurin series by
/// (1-z)^{3p+1}; degrees above 3p+1 are checked to vanish through a guard
/// window before the result is accepted.
inline ClosedForm f_closed(std::size_t p, unsigned bound = default_closed_form_bound)
{
    detail::require_bound(p, bound, "f_closed");
    const std::size_t cap = 3 * p + 1;
    const std::size_t order = cap + 1 + detail::guard_window;
    TruncSeries h(order);
    for (std::size_t s = 0; s < order; ++s)
        h[s] = detail::half_first(p, s);
    const long exponent = static_cast<long>(3 * p + 1);
    const TruncSeries base_power = series_pow(TruncSeries::from_polynomial(Polynomial{1, -1}, order),
                                              static_cast<std::size_t>(exponent), order);
    const Polynomial full = detail::extract_numerator(h, base_power, cap, "f_closed");
    return detail::normalize(b_first(p, 0) - h[0], full, ClosedFormBase::OneMinusZ, exponent, 1, "z");
}

/// P_n with f_{n+1}(z) = (z/2) P_n(z) / (1-z)^{3n+4}, from P_0 = 1 and
///   P_n = [z^2(z-1)^2 Q'' + z((1-6n)z^2 + (6n-4)z + 3) Q' + (9n^2 z^2 + (9n+1)z + 1) Q] / (z+1),
/// where Q = P_{n-1}. The division by z+1 must be exact.
inline Polynomial p_polynomial(std::size_t n, unsigned bound = default_closed_form_bound)
{
    detail::require_bound(n, bound, "p_polynomial");
    const Polynomial one_plus_z{1, 1};
    Polynomial q{1};
    for (std::size_t j = 1; j <= n; ++j) {
        const Rational r(j);
        const Polynomial c2 = Polynomial{0, 0, 1} * Polynomial{1, -2, 1};
        const Polynomial c1 = Polynomial{0, 3, Rational(6) * r - Rational(4), Rational(1) - Rational(6) * r};
        const Polynomial c0 = Polynomial{1, Rational(9) * r + Rational(1), Rational(9) * r * r};
        const Polynomial d1 = q.derivative();
        const Polynomial d2 = d1.derivative();
        q = (c2 * d2 + c1 * d1 + c0 * q).exact_divide(one_plus_z);
    }
    return q;
}

/// g_p(z) = sum_n n^{2p} J_n^2(2 n z) over (1-4z^2)^{(6p+1)/2}.
///
/// Works in w = z^2: the exact series is multiplied by the binomial series of
/// (1-4w)^{(6p+1)/2}, terms past degree 3p+1 in w must vanish through the
/// guard window, and the surviving numerator degree is whatever remains.
inline ClosedForm g_closed(std::size_t p, unsigned bound = default_closed_form_bound)
{
    detail::require_bound(p, bound, "g_closed");
    const std::size_t cap = 3 * p + 1;
    const std::size_t order = cap + 1 + detail::guard_window;
    TruncSeries h(order);
    for (std::size_t s = 0; s < order; ++s)
        h[s] = detail::half_second(p, s);
    const long exp_num = static_cast<long>(6 * p + 1);
    const TruncSeries base_power = binomial_series(Rational(exp_num, 2), Rational(-4), 1, order);
    const Polynomial in_w = detail::extract_numerator(h, base_power, cap, "g_closed");

    std::vector<Rational> in_z(in_w.coeffs().empty() ? 0 : 2 * in_w.coeffs().size() - 1);
    for (std::size_t j = 0; j < in_w.coeffs().size(); ++j)
        in_z[2 * j] = in_w.coeffs()[j];
    return detail::normalize(b_second(p, 0) - h[0], Polynomial(std::move(in_z)), ClosedFormBase::OneMinusFourZSq,
                             exp_num, 2, "z");
}

/// S1(m, a) = sum_{n>=1} n^{2m} J_n^2(n a) = g_m(a/2) - [m = 0], in the variable a.
inline ClosedForm s1_closed(std::size_t m, unsigned bound = default_closed_form_bound)
{
    detail::require_bound(m, bound, "s1_closed");
    const ClosedForm g = g_closed(m, bound);
    Polynomial full = g.prefactor * (Polynomial::monomial(Rational(1), g.z_power) * g.numerator);
    full = full.rescaled(Rational(1, 2));
    const Rational constant = g.constant - (m == 0 ? Rational(1) : Rational(0));
    return detail::normalize(constant, full, ClosedFormBase::OneMinusZSq, g.exponent_num, g.exponent_den, "a");
}

} // namespace kapteyn
