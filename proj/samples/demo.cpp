// Converts n^2 weights to Taylor form, builds f_2 in closed form and checks
// it against direct summation.

#include <cstdio>

#include "kapteyn/io.hpp"
#include "kapteyn/kapteyn.hpp"

int main()
{
    using namespace kapteyn;

    KapteynFirstCoeffs<Rational> squares{Rational(0), {}};
    for (long n = 0; n < 8; ++n)
        squares.a.emplace_back(n * n);
    std::printf("taylor: %s\n", to_json(kapteyn1_to_taylor(squares)).dump().c_str());

    const ClosedForm f2 = f_closed(2);
    std::printf("f_2(z) = %s\n", format_pretty(f2).c_str());

    const double z = 0.25;
    auto weight = [](std::size_t n) { return static_cast<double>(n * n * n * n); };
    const EvalReport sum = eval_kapteyn1(weight, 0.0, z);
    std::printf("z = %.2f: closed %.15g, summed %.15g (%d terms)\n", z, f2.evaluate(z), sum.value, sum.terms_used);

    const KeplerParams orbit{0.3, 1.0};
    std::printf("Kepler e = 0.3, M = 1: E = %.15g\n", kepler_bessel(orbit).value);
}
