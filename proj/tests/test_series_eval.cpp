#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "kapteyn/closed_forms.hpp"
#include "kapteyn/series_eval.hpp"

using namespace kapteyn;

namespace
{

auto squares = [](std::size_t n) { return static_cast<double>(n * n); };
auto ones = [](std::size_t) { return 1.0; };
auto zeros = [](std::size_t) { return 0.0; };

double residual(const KeplerParams& kp, double e) { return std::abs(e - kp.eccentricity * std::sin(e) - kp.mean_anomaly); }

} // namespace

TEST(EvalKapteyn1, Examples)
{
    EXPECT_EQ(eval_kapteyn1(zeros, 0.0, 0.5).value, 0.0);
    EXPECT_NEAR(eval_kapteyn1(squares, 0.0, 0.2).value, 0.1 / std::pow(0.8, 4), 1e-9);
    EXPECT_NEAR(eval_kapteyn1(ones, 0.0, 0.5).value, 1.5, 1e-9);
}

TEST(EvalKapteyn1, SpanOverloadMatchesCallable)
{
    const std::vector<double> a{0.5, -1.0, 2.0, 0.25};
    const auto from_span = eval_kapteyn1(std::span<const double>(a), 1.0, 0.4);
    auto fn = [&](std::size_t n) { return n < a.size() ? a[n] : 0.0; };
    EXPECT_NEAR(from_span.value, eval_kapteyn1(fn, 1.0, 0.4).value, 1e-15);
}

TEST(EvalKapteyn1, ClosedFormGrid)
{
    auto weight = [](long p) { return [p](std::size_t n) { return std::pow(static_cast<double>(n), 2.0 * p); }; };
    for (long p = 0; p <= 4; ++p)
        for (double z : {0.1, 0.2, 0.3})
            EXPECT_NEAR(eval_kapteyn1(weight(p), 0.0, z).value, f_closed(p).evaluate(z), 1e-9) << p << " " << z;
}

TEST(EvalKapteyn1, DomainAndConvergenceErrors)
{
    EXPECT_THROW(eval_kapteyn1(ones, 0.0, 1.0), DomainError);
    EXPECT_THROW(eval_kapteyn1(ones, -1.0, 0.5), DomainError);
    SumConfig tight;
    tight.max_n = 5;
    EXPECT_THROW(eval_kapteyn1(squares, 0.0, 0.9, tight), NonConvergence);
    SumConfig bad;
    bad.tol = -1;
    EXPECT_THROW(eval_kapteyn1(ones, 0.0, 0.1, bad), DomainError);
}

TEST(EvalKapteyn2, Examples)
{
    EXPECT_EQ(eval_kapteyn2(zeros, zeros, 0.0, 0.0, 0.3).value, 0.0);
    EXPECT_NEAR(eval_kapteyn2(squares, zeros, 0.0, 0.0, 0.2).value, g_closed(1).evaluate(0.2), 1e-9);
    EXPECT_NEAR(eval_kapteyn2(ones, zeros, 0.0, 0.0, 0.1).value, g_closed(0).evaluate(0.1), 1e-10);
    EXPECT_THROW(eval_kapteyn2(ones, zeros, 0.0, 0.0, 0.5), DomainError);
}

TEST(EvalKapteyn2, ClosedFormGrid)
{
    auto weight = [](long p) { return [p](std::size_t n) { return std::pow(static_cast<double>(n), 2.0 * p); }; };
    for (long p = 0; p <= 4; ++p)
        for (double z : {0.05, 0.1, 0.2})
            EXPECT_NEAR(eval_kapteyn2(weight(p), zeros, 0.0, 0.0, z).value, g_closed(p).evaluate(z), 1e-9)
                << p << " " << z;
}

TEST(EvalKapteyn2, OddChainAddsZTimesEvenSum)
{
    const double z = 0.15;
    const double even = eval_kapteyn2(squares, zeros, 1.0, 0.0, z).value;
    const double odd = eval_kapteyn2(zeros, squares, 1.0, 0.0, z).value;
    EXPECT_NEAR(odd, z * even, 1e-14);
}

TEST(EvalS1, Examples)
{
    EXPECT_NEAR(eval_s1(2, 0.3).value, s1_closed(2).evaluate(0.3), 1e-9);
    EXPECT_NEAR(eval_s1(2, 0.3).value, 0.0786, 1e-4);
    EXPECT_NEAR(eval_s1(1, 0.5).value, s1_closed(1).evaluate(0.5), 1e-9);
    EXPECT_NEAR(eval_s1(0, 1e-6).value, 0.0, 1e-12);
    EXPECT_EQ(eval_s1(0, 0.0).value, 0.0);
    EXPECT_THROW(eval_s1(1, 1.0), DomainError);
    EXPECT_THROW(eval_s1(1, -0.1), DomainError);
}

TEST(EvalS1, ClosedFormGrid)
{
    for (unsigned m = 0; m <= 3; ++m)
        for (double a : {0.2, 0.3, 0.5})
            EXPECT_NEAR(eval_s1(m, a).value, s1_closed(m).evaluate(a), 1e-9) << m << " " << a;
}

TEST(EvalReport, TermsUsedWithinLimit)
{
    SumConfig cfg;
    cfg.max_n = 200;
    const auto r = eval_kapteyn1(squares, 0.0, 0.3, cfg);
    EXPECT_LE(r.terms_used, cfg.max_n);
    EXPECT_GT(r.terms_used, 0);
    EXPECT_LT(std::abs(r.last_term), cfg.tol * std::max(1.0, std::abs(r.value)));
}

TEST(EvalKapteyn1, MonotoneTruncation)
{
    SumConfig small;
    small.max_n = 400;
    SumConfig large;
    large.max_n = 4000;
    for (double z : {0.1, 0.5, 0.7})
        EXPECT_NEAR(eval_kapteyn1(squares, 0.0, z, small).value, eval_kapteyn1(squares, 0.0, z, large).value, small.tol);
}

TEST(KeplerNewton, Examples)
{
    EXPECT_EQ(kepler_newton({0.0, 1.3}), 1.3);
    EXPECT_NEAR(kepler_newton({0.3, std::numbers::pi}), std::numbers::pi, 1e-15);
    EXPECT_NEAR(kepler_newton({0.1, 1.0}), 1.0885977523978936, 1e-13);
    EXPECT_NEAR(kepler_newton({0.5, 2.0}), 2.3542427582227809, 1e-13);
    EXPECT_THROW(kepler_newton({1.0, 1.0}), DomainError);
    EXPECT_THROW(kepler_newton({-0.1, 1.0}), DomainError);
}

TEST(KeplerBessel, Examples)
{
    EXPECT_EQ(kepler_bessel({0.0, 0.7}).value, 0.7);
    EXPECT_NEAR(kepler_bessel({0.1, 1.0}).value, kepler_newton({0.1, 1.0}), 1e-10);
    EXPECT_NEAR(kepler_bessel({0.5, 2.0}).value, kepler_newton({0.5, 2.0}), 1e-8);
}

TEST(KeplerBessel, ResidualGrid)
{
    const SumConfig cfg;
    for (double ecc : {0.0, 0.1, 0.3, 0.5, 0.6})
        for (double m : {0.5, 1.0, 2.0, 3.0}) {
            const KeplerParams kp{ecc, m};
            EXPECT_LT(residual(kp, kepler_bessel(kp, cfg).value), 10 * cfg.tol) << ecc << " " << m;
            EXPECT_LT(residual(kp, kepler_newton(kp)), 1e-13);
        }
}

TEST(EvalKapteyn, WideDomainAgreesWithClosedForms)
{
    // Large n z needs many terms whose ascending series would cancel badly.
    auto weight = [](std::size_t n) { return std::pow(static_cast<double>(n), 4.0); };
    for (double z : {0.5, 0.7}) {
        const double closed = f_closed(2).evaluate(z);
        EXPECT_NEAR(eval_kapteyn1(weight, 0.0, z).value, closed, 1e-11 * closed) << z;
    }
    for (double z : {0.3, 0.45}) {
        const double closed = g_closed(2).evaluate(z);
        EXPECT_NEAR(eval_kapteyn2(weight, zeros, 0.0, 0.0, z).value, closed, 1e-11 * closed) << z;
    }
    SumConfig wide;
    wide.max_n = 5000;
    const double s = s1_closed(3).evaluate(0.9);
    EXPECT_NEAR(eval_s1(3, 0.9, wide).value, s, 1e-11 * s);
    EXPECT_THROW(eval_kapteyn1(weight, 0.0, 0.9), NonConvergence);
}

TEST(KeplerBessel, HighEccentricity)
{
    const KeplerParams kp{0.9, 1.0};
    EXPECT_NEAR(kepler_bessel(kp).value, kepler_newton(kp), 1e-12);
}
