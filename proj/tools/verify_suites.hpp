#pragma once

// Identity and oracle checks exposed through `kapteyn verify`.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kapteyn/io.hpp"
#include "kapteyn/kapteyn.hpp"

namespace kapteyn::cli
{

struct VerifyReport
{
    std::string suite;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    json failures = json::array();

    void record(bool ok, json where)
    {
        ++checks;
        if (ok)
            return;
        ++failure_count;
        if (failures.size() < 20)
            failures.push_back(std::move(where));
    }

    bool passed() const { return failure_count == 0; }

    json to_json() const
    {
        return json{{"suite", suite},
                    {"checks", checks},
                    {"failure_count", failure_count},
                    {"failures", failures},
                    {"pass", passed()}};
    }
};

/// sum_{j=k}^{s} u_{2j+o, j-k} v_{2s+o, s-j} = delta_{k,s} for both parities o.
inline VerifyReport verify_biortho1(const std::vector<long>& nus, std::size_t s_max)
{
    VerifyReport rep{"biortho1"};
    for (long nu_i : nus) {
        const Rational nu(nu_i);
        for (std::size_t odd = 0; odd <= 1; ++odd)
            for (std::size_t s = 0; s <= s_max; ++s)
                for (std::size_t k = 0; k <= s; ++k) {
                    Rational sum(0);
                    for (std::size_t j = k; j <= s; ++j)
                        sum += coeff_u(nu, 2 * j + odd, j - k) * coeff_v(nu, 2 * s + odd, s - j);
                    const Rational expected(k == s ? 1 : 0);
                    rep.record(sum == expected,
                               json{{"nu", nu_i}, {"parity", odd ? "odd" : "even"}, {"s", s}, {"k", k}, {"got", sum.str()}});
                }
    }
    return rep;
}

/// sum_{k=j}^{s} alpha_{s,k} beta_{k,j} = delta_{j,s}.
inline VerifyReport verify_biortho2(const std::vector<long>& mus, const std::vector<long>& nus, std::size_t s_max)
{
    VerifyReport rep{"biortho2"};
    for (long mu_i : mus)
        for (long nu_i : nus) {
            const Rational mu(mu_i);
            const Rational nu(nu_i);
            for (std::size_t s = 0; s <= s_max; ++s)
                for (std::size_t j = 0; j <= s; ++j) {
                    Rational sum(0);
                    for (std::size_t k = j; k <= s; ++k)
                        sum += coeff_alpha(mu, nu, s, k) * coeff_beta(mu, nu, k, j);
                    const Rational expected(j == s ? 1 : 0);
                    rep.record(sum == expected,
                               json{{"mu", mu_i}, {"nu", nu_i}, {"s", s}, {"j", j}, {"got", sum.str()}});
                }
        }
    return rep;
}

/// 2^r d^m/dt^m sinh^r(t)|_0 = sum_k C(r,k) (-1)^k (r-2k)^m.
inline VerifyReport verify_lemma(std::size_t r_max, std::size_t m_max)
{
    VerifyReport rep{"lemma"};
    for (std::size_t r = 0; r <= r_max; ++r)
        for (std::size_t m = 0; m <= m_max; ++m) {
            const Rational lhs = pow(Rational(2), static_cast<long long>(r)) * sinh_power_derivative(r, m);
            Rational rhs(0);
            for (std::size_t k = 0; k <= r; ++k) {
                const Rational term = Rational(binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(k))) *
                                      pow(Rational(static_cast<long long>(r) - 2 * static_cast<long long>(k)),
                                          static_cast<long long>(m));
                rhs += (k % 2 == 0) ? term : -term;
            }
            rep.record(lhs == rhs, json{{"r", r}, {"m", m}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
        }
    return rep;
}

/// Closed forms against direct Kapteyn summation with weights n^{2p}.
/// First kind at every z in zs_first, second kind at every z in zs_second.
inline VerifyReport verify_closed_vs_sum(const std::vector<long>& ps, const std::vector<double>& zs_first,
                                         const std::vector<double>& zs_second, double tol, const SumConfig& cfg)
{
    VerifyReport rep{"closed-vs-sum"};
    for (long p : ps) {
        auto weight = [p](std::size_t n) { return std::pow(static_cast<double>(n), 2.0 * static_cast<double>(p)); };
        auto zero = [](std::size_t) { return 0.0; };
        const ClosedForm f = f_closed(static_cast<std::size_t>(p));
        for (double z : zs_first) {
            const double closed = f.evaluate(z);
            const double summed = eval_kapteyn1(weight, 0.0, z, cfg).value;
            rep.record(std::abs(closed - summed) <= tol,
                       json{{"kind", "first"}, {"p", p}, {"z", z}, {"closed", closed}, {"sum", summed}});
        }
        const ClosedForm g = g_closed(static_cast<std::size_t>(p));
        for (double z : zs_second) {
            const double closed = g.evaluate(z);
            const double summed = eval_kapteyn2(weight, zero, 0.0, 0.0, z, cfg).value;
            rep.record(std::abs(closed - summed) <= tol,
                       json{{"kind", "second"}, {"p", p}, {"z", z}, {"closed", closed}, {"sum", summed}});
        }
    }
    return rep;
}

inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 24);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline std::vector<Rational> random_sequence(std::mt19937_64& rng, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::vector<Rational> v(len(rng));
    for (auto& x : v)
        x = random_rational(rng);
    return v;
}

/// Both transform pairs as exact mutual inverses on random sequences.
inline VerifyReport verify_roundtrip(std::size_t count, std::size_t max_len, std::uint64_t seed)
{
    VerifyReport rep{"roundtrip"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> order(0, 2);
    for (std::size_t i = 0; i < count; ++i) {
        const Rational nu(order(rng));
        const Rational mu(order(rng));

        const KapteynFirstCoeffs<Rational> k1{nu, random_sequence(rng, max_len)};
        rep.record(taylor_to_kapteyn1(kapteyn1_to_taylor(k1), nu) == k1,
                   json{{"pair", "first K->T->K"}, {"case", i}, {"nu", nu.str()}});
        const TaylorCoeffs<Rational> t1{random_sequence(rng, max_len)};
        rep.record(kapteyn1_to_taylor(taylor_to_kapteyn1(t1, nu)) == t1,
                   json{{"pair", "first T->K->T"}, {"case", i}, {"nu", nu.str()}});

        const std::size_t len2 = std::max<std::size_t>(1, max_len / 2);
        std::vector<Rational> a = random_sequence(rng, len2);
        std::vector<Rational> c(a.size());
        for (auto& x : c)
            x = random_rational(rng);
        const KapteynSecondCoeffs<Rational> k2{mu, nu, a, c};
        rep.record(taylor_to_kapteyn2(kapteyn2_to_taylor(k2), mu, nu) == k2,
                   json{{"pair", "second K->T->K"}, {"case", i}, {"mu", mu.str()}, {"nu", nu.str()}});
        // Even-length Taylor input so no implicit zero is appended.
        std::vector<Rational> b = random_sequence(rng, max_len);
        if (b.size() % 2 == 1)
            b.push_back(random_rational(rng));
        const TaylorCoeffs<Rational> t2{b};
        rep.record(kapteyn2_to_taylor(taylor_to_kapteyn2(t2, mu, nu)) == t2,
                   json{{"pair", "second T->K->T"}, {"case", i}, {"mu", mu.str()}, {"nu", nu.str()}});
    }
    return rep;
}

/// Ascending series against the trapezoid integral, and the product series
/// against the product of two single series.
inline VerifyReport verify_bessel_xcheck(int n_max, const std::vector<double>& zs, double tol_integral,
                                         double tol_product)
{
    VerifyReport rep{"bessel-xcheck"};
    for (int n = 0; n <= n_max; ++n)
        for (double z : zs) {
            const double series = bessel_j(n, z);
            const double integral = bessel_j_integral(n, z, 1024);
            rep.record(std::abs(series - integral) < tol_integral,
                       json{{"check", "series-vs-integral"}, {"n", n}, {"z", z}, {"series", series}, {"integral", integral}});
        }
    const double orders[] = {0.0, 1.0, 2.0, 2.5};
    for (double mu : orders)
        for (double nu : orders)
            for (int i = 0; i <= 8; ++i) {
                const double z = 0.25 * i;
                const double product = bessel_product(mu, nu, z);
                const double separate = bessel_j(mu, z) * bessel_j(nu, z);
                rep.record(std::abs(product - separate) < tol_product,
                           json{{"check", "product"}, {"mu", mu}, {"nu", nu}, {"z", z}, {"product", product},
                                {"separate", separate}});
            }
    return rep;
}

} // namespace kapteyn::cli
