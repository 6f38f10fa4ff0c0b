#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kapteyn/scalar.hpp"

namespace kapteyn
{

/// Maclaurin coefficients b_m of f(z) = sum b_m z^m, truncated at N.
template <CoeffScalar S>
struct TaylorCoeffs
{
    std::vector<S> b;

    friend bool operator==(const TaylorCoeffs&, const TaylorCoeffs&) = default;
};

/// Coefficients a_n of z^nu f(z) = sum a_n J_{nu+n}[(nu+n) z].
template <CoeffScalar S>
struct KapteynFirstCoeffs
{
    S nu{};
    std::vector<S> a;

    friend bool operator==(const KapteynFirstCoeffs&, const KapteynFirstCoeffs&) = default;
};

namespace detail
{
inline void require_half_index(std::size_t n, std::size_t k, const char* what)
{
    if (2 * k > n)
        throw DomainError(std::string(what) + ": k = " + std::to_string(k) + " exceeds floor(n/2) for n = " +
                          std::to_string(n));
}
} // namespace detail

/// u_{n,k} = (-1)^k / (k! Gamma(nu+n-k+1)) * ((nu+n-2k)/2)^(nu+n), 0 <= k <= n/2.
///
/// Maps first-kind Kapteyn coefficients to Taylor coefficients. Uses
/// 0^0 = 1 at the nu = n = 0 cell.
template <CoeffScalar S>
S coeff_u(const S& nu, std::size_t n, std::size_t k)
{
    detail::require_order(nu, "nu");
    detail::require_half_index(n, k, "coeff_u");
    const S nn = nu + S(n);
    const S kk = S(k);
    S sign = (k % 2 == 0) ? S(1) : S(-1);
    S value = sign / (detail::gamma_fn(kk + S(1)) * detail::gamma_fn(nn - kk + S(1))) *
              detail::power((nn - S(2) * kk) / S(2), nn);
    return detail::finite_or_throw(value, "coeff_u");
}

/// v_{n,k} = 1/2 (nu+n-2k)^2 Gamma(nu+n-k) / k! * (2/(nu+n))^(nu+n-2k+1).
///
/// Inverse partner of coeff_u. The formula is singular at nu + n = 0; that
/// cell is defined as 1, the nu -> 0 limit and the value that keeps the pair
/// mutually inverse.
template <CoeffScalar S>
S coeff_v(const S& nu, std::size_t n, std::size_t k)
{
    detail::require_order(nu, "nu");
    detail::require_half_index(n, k, "coeff_v");
    const S nn = nu + S(n);
    if (nn == S(0))
        return S(1);
    const S kk = S(k);
    const S lead = nn - S(2) * kk;
    S value = lead * lead / S(2) * detail::gamma_fn(nn - kk) / detail::gamma_fn(kk + S(1)) *
              detail::power(S(2) / nn, lead + S(1));
    return detail::finite_or_throw(value, "coeff_v");
}

/// b_s = sum_{m=0}^{floor(s/2)} u_{s,m} a_{s-2m}.
///
/// Lower triangular in the paired index, so the N+1 outputs depend only on
/// the N+1 inputs and truncation introduces no error.
template <CoeffScalar S>
TaylorCoeffs<S> kapteyn1_to_taylor(const KapteynFirstCoeffs<S>& kc)
{
    detail::require_order(kc.nu, "nu");
    TaylorCoeffs<S> out;
    out.b.resize(kc.a.size(), S(0));
    for (std::size_t s = 0; s < kc.a.size(); ++s) {
        S acc(0);
        for (std::size_t m = 0; 2 * m <= s; ++m) {
            const S& a = kc.a[s - 2 * m];
            if (a == S(0))
                continue;
            acc += coeff_u(kc.nu, s, m) * a;
        }
        out.b[s] = acc;
    }
    return out;
}

/// a_s = sum_{m=0}^{floor(s/2)} v_{s,m} b_{s-2m}.
template <CoeffScalar S>
KapteynFirstCoeffs<S> taylor_to_kapteyn1(const TaylorCoeffs<S>& tc, const S& nu)
{
    detail::require_order(nu, "nu");
    KapteynFirstCoeffs<S> out{nu, std::vector<S>(tc.b.size(), S(0))};
    for (std::size_t s = 0; s < tc.b.size(); ++s) {
        S acc(0);
        for (std::size_t m = 0; 2 * m <= s; ++m) {
            const S& b = tc.b[s - 2 * m];
            if (b == S(0))
                continue;
            acc += coeff_v(nu, s, m) * b;
        }
        out.a[s] = acc;
    }
    return out;
}

} // namespace kapteyn
