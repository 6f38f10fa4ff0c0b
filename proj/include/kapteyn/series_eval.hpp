#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>

#include "kapteyn/bessel.hpp"
#include "kapteyn/errors.hpp"
#include "kapteyn/scalar.hpp"

namespace kapteyn
{

/// Stopping policy for direct Kapteyn summation: stop after
/// consecutive_small successive terms below tol * max(1, |partial sum|).
struct SumConfig
{
    double tol = 1e-14;
    int max_n = 1000;
    int consecutive_small = 3;

    void validate() const
    {
        if (!(tol > 0))
            throw DomainError("SumConfig: tol must be positive");
        if (max_n < 1)
            throw DomainError("SumConfig: max_n must be at least 1");
        if (consecutive_small < 1)
            throw DomainError("SumConfig: consecutive_small must be at least 1");
    }
};

struct EvalReport
{
    double value = 0.0;
    int terms_used = 0;
    double last_term = 0.0;
};

struct KeplerParams
{
    double eccentricity = 0.0;
    double mean_anomaly = 0.0;

    void validate() const
    {
        if (!std::isfinite(eccentricity) || eccentricity < 0 || eccentricity >= 1)
            throw DomainError("KeplerParams: eccentricity must lie in [0, 1)");
        if (!std::isfinite(mean_anomaly))
            throw DomainError("KeplerParams: mean anomaly must be finite");
    }
};

namespace detail
{

// Neumaier compensated sum.
class CompensatedSum
{
public:
    void add(double x)
    {
        const double t = m_sum + x;
        if (std::abs(m_sum) >= std::abs(x))
            m_comp += (m_sum - t) + x;
        else
            m_comp += (x - t) + m_sum;
        m_sum = t;
    }
    double value() const { return m_sum + m_comp; }

private:
    double m_sum = 0.0;
    double m_comp = 0.0;
};

// Drives a term generator under the SumConfig stopping rule. `term(n)`
// returns {term value, magnitude used by the stopping test}.
template <class TermFn>
EvalReport sum_until_small(TermFn&& term, int first_index, const SumConfig& cfg, const char* what)
{
    cfg.validate();
    CompensatedSum acc;
    int small = 0;
    double last = 0.0;
    for (int i = 0; i < cfg.max_n; ++i) {
        const auto [value, magnitude] = term(first_index + i);
        acc.add(value);
        last = value;
        if (magnitude < cfg.tol * std::max(1.0, std::abs(acc.value()))) {
            if (++small >= cfg.consecutive_small)
                return {acc.value(), i + 1, last};
        } else {
            small = 0;
        }
    }
    throw NonConvergence(std::string(what) + ": no convergence within " + std::to_string(cfg.max_n) + " terms");
}

// Inner Bessel tolerance for a term with weight w: one order tighter than
// the outer tolerance after the weight is applied.
inline BesselEvalConfig inner_config(const SumConfig& cfg, double weight)
{
    BesselEvalConfig b;
    b.tol = std::min(b.tol, cfg.tol / 10 / std::max(1.0, std::abs(weight)));
    b.max_terms = 400;
    return b;
}

// The ascending series is used while its terms decrease from the start,
// i.e. (x/2)^2 < order + 1. Past that it suffers cancellation (and is capped
// at |x| <= 50), so the standard library's cyl_bessel_j takes over.
inline double kapteyn_j(double order, double x, const BesselEvalConfig& b)
{
    if ((x / 2) * (x / 2) < order + 1 || (x < 0 && order != std::floor(order)))
        return bessel_j(order, x, b);
    const double v = std::cyl_bessel_j(order, std::abs(x));
    return (x < 0 && std::fmod(order, 2.0) != 0.0) ? -v : v;
}

inline double kapteyn_jj(double mu, double nu, double x, const BesselEvalConfig& b)
{
    if ((x / 2) * (x / 2) * (mu + nu + 2) < (mu + 1) * (nu + 1))
        return bessel_product(mu, nu, x, b);
    return kapteyn_j(mu, x, b) * kapteyn_j(nu, x, b);
}

} // namespace detail

/// sum_n a(n) J_{n+nu}[(n+nu) z] for |z| < 1, summed until the stopping rule holds.
template <class CoeffFn>
EvalReport eval_kapteyn1(CoeffFn&& a, double nu, double z, const SumConfig& cfg = {})
{
    detail::require_order(nu, "nu");
    if (!(std::abs(z) < 1))
        throw DomainError("eval_kapteyn1: requires |z| < 1");
    auto term = [&](int n) {
        const double w = static_cast<double>(a(static_cast<std::size_t>(n)));
        if (w == 0.0)
            return std::pair{0.0, 0.0};
        const double order = n + nu;
        const double t = w * detail::kapteyn_j(order, order * z, detail::inner_config(cfg, w));
        return std::pair{t, std::abs(t)};
    };
    return detail::sum_until_small(term, 0, cfg, "eval_kapteyn1");
}

/// Finite first-kind Kapteyn sum over every given coefficient.
inline EvalReport eval_kapteyn1(std::span<const double> a, double nu, double z, const SumConfig& cfg = {})
{
    cfg.validate();
    detail::require_order(nu, "nu");
    if (!(std::abs(z) < 1))
        throw DomainError("eval_kapteyn1: requires |z| < 1");
    detail::CompensatedSum acc;
    double last = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] == 0.0)
            continue;
        const double order = static_cast<double>(n) + nu;
        last = a[n] * detail::kapteyn_j(order, order * z, detail::inner_config(cfg, a[n]));
        acc.add(last);
    }
    return {acc.value(), static_cast<int>(a.size()), last};
}

/// sum_n (a(n) + z c(n)) J_{mu+n}[(mu+nu+2n) z] J_{nu+n}[(mu+nu+2n) z] for |z| < 1/2,
/// with each product taken from the single product series where it is well conditioned.
template <class AFn, class CFn>
EvalReport eval_kapteyn2(AFn&& a, CFn&& c, double mu, double nu, double z, const SumConfig& cfg = {})
{
    detail::require_order(mu, "mu");
    detail::require_order(nu, "nu");
    if (!(std::abs(z) < 0.5))
        throw DomainError("eval_kapteyn2: requires |z| < 1/2");
    auto term = [&](int n) {
        const double w = static_cast<double>(a(static_cast<std::size_t>(n))) +
                         z * static_cast<double>(c(static_cast<std::size_t>(n)));
        if (w == 0.0)
            return std::pair{0.0, 0.0};
        const double arg = (mu + nu + 2.0 * n) * z;
        const double t = w * detail::kapteyn_jj(mu + n, nu + n, arg, detail::inner_config(cfg, w));
        return std::pair{t, std::abs(t)};
    };
    return detail::sum_until_small(term, 0, cfg, "eval_kapteyn2");
}

/// Finite second-kind Kapteyn sum over every given coefficient pair.
inline EvalReport eval_kapteyn2(std::span<const double> a, std::span<const double> c, double mu, double nu, double z,
                                const SumConfig& cfg = {})
{
    cfg.validate();
    detail::require_order(mu, "mu");
    detail::require_order(nu, "nu");
    if (a.size() != c.size())
        throw DomainError("eval_kapteyn2: a and c chains differ in length");
    if (!(std::abs(z) < 0.5))
        throw DomainError("eval_kapteyn2: requires |z| < 1/2");
    detail::CompensatedSum acc;
    double last = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        const double w = a[n] + z * c[n];
        if (w == 0.0)
            continue;
        const double arg = (mu + nu + 2.0 * static_cast<double>(n)) * z;
        last = w * detail::kapteyn_jj(mu + static_cast<double>(n), nu + static_cast<double>(n), arg,
                                  detail::inner_config(cfg, w));
        acc.add(last);
    }
    return {acc.value(), static_cast<int>(a.size()), last};
}

/// S1(m, a) = sum_{n>=1} n^{2m} J_n(n a)^2 for 0 <= a < 1, by direct summation.
inline EvalReport eval_s1(unsigned m, double a, const SumConfig& cfg = {})
{
    if (!(a >= 0 && a < 1))
        throw DomainError("eval_s1: requires 0 <= a < 1");
    auto term = [&](int n) {
        const double w = std::pow(static_cast<double>(n), 2.0 * m);
        const double j = detail::kapteyn_j(n, n * a, detail::inner_config(cfg, std::sqrt(w)));
        const double t = w * j * j;
        return std::pair{t, t};
    };
    return detail::sum_until_small(term, 1, cfg, "eval_s1");
}

/// Solves M = E - e sin E by Newton's method from E0 = M.
inline double kepler_newton(const KeplerParams& kp, double tol = 1e-13)
{
    kp.validate();
    if (!(tol > 0))
        throw DomainError("kepler_newton: tol must be positive");
    const double e = kp.eccentricity;
    const double m = kp.mean_anomaly;
    double ecc_anomaly = m;
    for (int it = 0; it < 64; ++it) {
        const double residual = ecc_anomaly - e * std::sin(ecc_anomaly) - m;
        if (std::abs(residual) < tol)
            return ecc_anomaly;
        ecc_anomaly -= residual / (1 - e * std::cos(ecc_anomaly));
    }
    throw NonConvergence("kepler_newton: no convergence within 64 iterations");
}

/// E(M) = M + sum_{n>=1} (2/n) J_n(n e) sin(n M).
///
/// The stopping test uses the envelope (2/n)|J_n(n e)| rather than the term,
/// so a chance zero of sin(n M) cannot end the sum early. Accuracy degrades
/// as e approaches 1 because J_n(n e) decays ever more slowly in n.
inline EvalReport kepler_bessel(const KeplerParams& kp, const SumConfig& cfg = {})
{
    kp.validate();
    const double e = kp.eccentricity;
    const double m = kp.mean_anomaly;
    auto term = [&](int n) {
        const double envelope = 2.0 / n * detail::kapteyn_j(n, n * e, detail::inner_config(cfg, 2.0 / n));
        return std::pair{envelope * std::sin(n * m), std::abs(envelope)};
    };
    EvalReport r = detail::sum_until_small(term, 1, cfg, "kepler_bessel");
    r.value += m;
    return r;
}

} // namespace kapteyn
