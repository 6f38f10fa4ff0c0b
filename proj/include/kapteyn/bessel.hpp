#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "kapteyn/errors.hpp"

namespace kapteyn
{

/// Truncation policy for the ascending Bessel series.
///
/// tol bounds the first omitted term relative to the partial sum, so tiny
/// values such as J_300(45) keep their sign and leading digits. The terms grow
/// before they decay once |z|/2 exceeds the order scale, so max_terms needs
/// headroom for large arguments.
struct BesselEvalConfig
{
    double tol = 1e-17;
    int max_terms = 200;

    void validate() const
    {
        if (!(tol > 0))
            throw DomainError("BesselEvalConfig: tol must be positive");
        if (max_terms < 1)
            throw DomainError("BesselEvalConfig: max_terms must be at least 1");
    }
};

namespace detail
{

inline constexpr double bessel_max_abs_z = 50.0;

inline void require_bessel_args(double nu, double z, const char* what)
{
    if (!std::isfinite(nu) || nu < 0)
        throw DomainError(std::string(what) + ": order must be a finite nonnegative real");
    if (!std::isfinite(z) || std::abs(z) > bessel_max_abs_z)
        throw DomainError(std::string(what) + ": |z| must not exceed 50");
    if (z < 0 && nu != std::floor(nu))
        throw DomainError(std::string(what) + ": negative argument needs an integer order");
}

// (z/2)^nu / Gamma(nu + 1), written as (z/2)^f / Gamma(1 + f) * prod_{j=1}^{m} (z/2)/(f + j)
// with nu = m + f, so Gamma is only evaluated on [1, 2) and nothing overflows.
inline double leading_term(double nu, double z)
{
    const double whole = std::floor(nu);
    const double frac = nu - whole;
    const double x = z / 2;
    double t = 1.0;
    if (frac != 0.0)
        t = std::pow(x, frac) / std::tgamma(1.0 + frac);
    const auto m = static_cast<long>(whole);
    for (long j = 1; j <= m && t != 0.0; ++j)
        t *= x / (frac + static_cast<double>(j));
    return t;
}

} // namespace detail

/// J_nu(z) from its ascending series sum (-1)^n / (n! Gamma(nu+n+1)) (z/2)^(nu+2n).
///
/// Stops once the next term is below cfg.tol times the partial sum and the
/// terms are decreasing; the series alternates, so that term bounds the tail.
inline double bessel_j(double nu, double z, const BesselEvalConfig& cfg = {})
{
    cfg.validate();
    detail::require_bessel_args(nu, z, "bessel_j");
    if (z == 0.0)
        return nu == 0.0 ? 1.0 : 0.0;

    const double q = -(z / 2) * (z / 2);
    double term = detail::leading_term(nu, z);
    double sum = 0.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        sum += term;
        const double next = term * q / ((k + 1.0) * (nu + k + 1.0));
        if (std::abs(next) < cfg.tol * std::abs(sum) && std::abs(next) <= std::abs(term))
            return sum;
        term = next;
    }
    throw NonConvergence("bessel_j: no convergence within " + std::to_string(cfg.max_terms) + " terms (nu = " +
                         std::to_string(nu) + ", z = " + std::to_string(z) + ")");
}

/// J_n(z) = (1/pi) int_0^pi cos(n E - z sin E) dE by the composite trapezoid
/// rule with quad_points panels. The integrand is smooth and its periodic
/// extension is even, so the rule converges spectrally.
inline double bessel_j_integral(int n, double z, int quad_points = 512)
{
    if (n < 0)
        throw DomainError("bessel_j_integral: order must be nonnegative");
    if (quad_points < 16)
        throw DomainError("bessel_j_integral: quad_points must be at least 16");
    const double h = std::numbers::pi / quad_points;
    auto integrand = [&](double e) { return std::cos(n * e - z * std::sin(e)); };
    double sum = 0.5 * (integrand(0.0) + integrand(std::numbers::pi));
    for (int j = 1; j < quad_points; ++j)
        sum += integrand(j * h);
    return sum * h / std::numbers::pi;
}

/// J_mu(z) J_nu(z) from the single product series
///   sum_k (-1)^k / (Gamma(mu+k+1) Gamma(nu+k+1)) C(mu+nu+2k, k) (z/2)^(mu+nu+2k),
/// under the same stopping rule as bessel_j.
inline double bessel_product(double mu, double nu, double z, const BesselEvalConfig& cfg = {})
{
    cfg.validate();
    detail::require_bessel_args(mu, z, "bessel_product");
    detail::require_bessel_args(nu, z, "bessel_product");
    if (z == 0.0)
        return (mu == 0.0 && nu == 0.0) ? 1.0 : 0.0;

    const double x2 = (z / 2) * (z / 2);
    const double sum_order = mu + nu;
    double term = detail::leading_term(mu, z) * detail::leading_term(nu, z);
    double sum = 0.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        sum += term;
        // t_{k+1}/t_k = -x^2 (s+2k+2)(s+2k+1) / ((k+1)(s+k+1)(mu+k+1)(nu+k+1)), s = mu + nu
        const double next = -term * x2 * (sum_order + 2 * k + 2) * (sum_order + 2 * k + 1) /
                            ((k + 1.0) * (sum_order + k + 1) * (mu + k + 1) * (nu + k + 1));
        if (std::abs(next) < cfg.tol * std::abs(sum) && std::abs(next) <= std::abs(term))
            return sum;
        term = next;
    }
    throw NonConvergence("bessel_product: no convergence within " + std::to_string(cfg.max_terms) + " terms");
}

} // namespace kapteyn
