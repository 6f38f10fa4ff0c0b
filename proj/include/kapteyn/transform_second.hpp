#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kapteyn/scalar.hpp"
#include "kapteyn/transform_first.hpp"

namespace kapteyn
{

/// Second-kind Kapteyn coefficients of
///   z^(mu+nu) f(z) = sum (a_n + z c_n) J_{mu+n}[(mu+nu+2n) z] J_{nu+n}[(mu+nu+2n) z].
///
/// The even chain a and odd chain c share one record and one length since
/// they enter through the single factor (a_n + z c_n).
template <CoeffScalar S>
struct KapteynSecondCoeffs
{
    S mu{};
    S nu{};
    std::vector<S> a;
    std::vector<S> c;

    friend bool operator==(const KapteynSecondCoeffs&, const KapteynSecondCoeffs&) = default;
};

namespace detail
{
inline void require_lower(std::size_t s, std::size_t k, const char* what)
{
    if (k > s)
        throw DomainError(std::string(what) + ": k = " + std::to_string(k) + " exceeds s = " + std::to_string(s));
}
} // namespace detail

/// alpha_{s,k}: Taylor -> second-kind Kapteyn. The 0/0 cell mu = nu = s = 0
/// is defined as 1 (forced by alpha_{s,s} beta_{s,s} = 1).
template <CoeffScalar S>
S coeff_alpha(const S& mu, const S& nu, std::size_t s, std::size_t k)
{
    detail::require_order(mu, "mu");
    detail::require_order(nu, "nu");
    detail::require_lower(s, k, "coeff_alpha");
    const S sum = mu + nu;
    const S ss = S(s);
    const S kk = S(k);
    const S diag = sum + S(2) * ss;
    if (diag == S(0))
        return S(1);
    const S lead = sum + S(2) * kk;
    S value = lead * lead * detail::gamma_fn(mu + kk + S(1)) * detail::gamma_fn(nu + kk + S(1)) /
              ((sum + ss + kk) * diag) * detail::gen_binomial(sum + ss + kk, s - k) *
              detail::power(S(2) / diag, lead);
    return detail::finite_or_throw(value, "coeff_alpha");
}

/// beta_{s,k}: second-kind Kapteyn -> Taylor.
template <CoeffScalar S>
S coeff_beta(const S& mu, const S& nu, std::size_t s, std::size_t k)
{
    detail::require_order(mu, "mu");
    detail::require_order(nu, "nu");
    detail::require_lower(s, k, "coeff_beta");
    const S sum = mu + nu;
    const S ss = S(s);
    const S kk = S(k);
    const S sign = ((s + k) % 2 == 0) ? S(1) : S(-1);
    S value = sign / (detail::gamma_fn(mu + ss + S(1)) * detail::gamma_fn(nu + ss + S(1))) *
              detail::gen_binomial(sum + S(2) * ss, s - k) * detail::power((sum + S(2) * kk) / S(2), sum + S(2) * ss);
    return detail::finite_or_throw(value, "coeff_beta");
}

/// b_{2s} = sum_k beta_{s,k} a_k and b_{2s+1} = sum_k beta_{s,k} c_k.
/// L coefficient pairs produce 2L Taylor coefficients.
template <CoeffScalar S>
TaylorCoeffs<S> kapteyn2_to_taylor(const KapteynSecondCoeffs<S>& kc)
{
    detail::require_order(kc.mu, "mu");
    detail::require_order(kc.nu, "nu");
    if (kc.a.size() != kc.c.size())
        throw DomainError("kapteyn2_to_taylor: a and c chains differ in length");
    const std::size_t len = kc.a.size();
    TaylorCoeffs<S> out;
    out.b.assign(2 * len, S(0));
    for (std::size_t s = 0; s < len; ++s) {
        S even(0);
        S odd(0);
        for (std::size_t k = 0; k <= s; ++k) {
            if (kc.a[k] == S(0) && kc.c[k] == S(0))
                continue;
            const S beta = coeff_beta(kc.mu, kc.nu, s, k);
            even += beta * kc.a[k];
            odd += beta * kc.c[k];
        }
        out.b[2 * s] = even;
        out.b[2 * s + 1] = odd;
    }
    return out;
}

/// a_s = sum_k alpha_{s,k} b_{2k} and c_s = sum_k alpha_{s,k} b_{2k+1}.
///
/// N+1 Taylor coefficients give floor(N/2)+1 pairs. When N is even the
/// missing b_{N+1} is taken as zero, i.e. f is exactly the given polynomial.
template <CoeffScalar S>
KapteynSecondCoeffs<S> taylor_to_kapteyn2(const TaylorCoeffs<S>& tc, const S& mu, const S& nu)
{
    detail::require_order(mu, "mu");
    detail::require_order(nu, "nu");
    const std::size_t len = tc.b.empty() ? 0 : (tc.b.size() - 1) / 2 + 1;
    auto b_at = [&](std::size_t i) { return i < tc.b.size() ? tc.b[i] : S(0); };
    KapteynSecondCoeffs<S> out{mu, nu, std::vector<S>(len, S(0)), std::vector<S>(len, S(0))};
    for (std::size_t s = 0; s < len; ++s) {
        S even(0);
        S odd(0);
        for (std::size_t k = 0; k <= s; ++k) {
            const S be = b_at(2 * k);
            const S bo = b_at(2 * k + 1);
            if (be == S(0) && bo == S(0))
                continue;
            const S alpha = coeff_alpha(mu, nu, s, k);
            even += alpha * be;
            odd += alpha * bo;
        }
        out.a[s] = even;
        out.c[s] = odd;
    }
    return out;
}

} // namespace kapteyn
