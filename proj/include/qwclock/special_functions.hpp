#pragma once

// Integer-order Bessel functions of the first kind and Struve functions H_0, H_1.
// Power series for |x| <= 30, large-argument forms beyond. The alternating series
// cancels about 13 digits near |x| = 30, so it is summed in quad precision where
// the compiler has it.

#include <cmath>
#include <limits>
#include <numbers>

#include "core.hpp"

namespace qwclock::special {

inline constexpr double series_limit = 30.0;

namespace detail {

#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using wide = __float128;
#else
using wide = long double;
#endif

inline constexpr double series_cutoff = 1e-14;

inline wide wide_abs(wide v) { return v < 0 ? -v : v; }

// sum_m (-1)^m (x/2)^(2m+n) / (m! (m+n)!)
inline double bessel_j_series(int n, double x) {
    const wide half = static_cast<wide>(x) / 2;
    wide term = 1;
    for (int i = 1; i <= n; ++i) term *= half / i;
    wide sum = term;
    const wide h2 = half * half;
    for (int m = 1; m < 500; ++m) {
        term *= -h2 / (static_cast<wide>(m) * (m + n));
        sum += term;
        if (wide_abs(term) <= static_cast<wide>(series_cutoff) * wide_abs(sum) && m > 2) break;
    }
    return static_cast<double>(sum);
}

// H_nu(x) = sum_m (-1)^m (x/2)^(2m+nu+1) / (Gamma(m+3/2) Gamma(m+nu+3/2))
inline double struve_series(int nu, double x) {
    const wide half = static_cast<wide>(x) / 2;
    // Gamma(3/2) Gamma(nu + 3/2) is pi/4 for nu = 0 and 3 pi/8 for nu = 1.
    const wide gammas = static_cast<wide>(std::numbers::pi_v<long double>) * (nu == 0 ? 0.25L : 0.375L);
    wide term = nu == 0 ? half / gammas : half * half / gammas;
    wide sum = term;
    const wide h2 = half * half;
    for (int m = 1; m < 500; ++m) {
        term *= -h2 / ((m + static_cast<wide>(0.5)) * (m + nu + static_cast<wide>(0.5)));
        sum += term;
        if (wide_abs(term) <= static_cast<wide>(series_cutoff) * wide_abs(sum) && m > 2) break;
    }
    return static_cast<double>(sum);
}

// H_nu(x) - Y_nu(x) ~ (1/pi) sum_k Gamma(k+1/2) (x/2)^(nu-2k-1) / Gamma(nu+1/2-k), x > 0.
inline double struve_minus_neumann_asymptotic(int nu, double x) {
    double sum = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 40; ++k) {
        const double g = std::tgamma(nu + 0.5 - k);
        const double term = std::tgamma(k + 0.5) * std::pow(x / 2.0, nu - 2 * k - 1) / g;
        if (std::fabs(term) > best) break;  // asymptotic series started diverging
        best = std::fabs(term);
        sum += term;
        if (best < 1e-17 * std::fabs(sum)) break;
    }
    return sum / pi;
}

}  // namespace detail

/// J_n(x) for integer n >= 0 and real x.
inline double bessel_j(int n, double x) {
    require(n >= 0, "Bessel order must be non-negative");
    const double sign = (x < 0 && (n % 2 == 1)) ? -1.0 : 1.0;
    const double ax = std::fabs(x);
    if (ax <= series_limit) return sign * detail::bessel_j_series(n, ax);
    return sign * std::cyl_bessel_j(static_cast<double>(n), ax);
}

/// Struve H_nu(x) for nu in {0, 1} and real x. H_0 is odd, H_1 is even.
inline double struve_h(int nu, double x) {
    require(nu == 0 || nu == 1, "Struve order must be 0 or 1");
    const double sign = (x < 0 && nu == 0) ? -1.0 : 1.0;
    const double ax = std::fabs(x);
    if (ax == 0.0) return 0.0;
    if (ax <= series_limit) return sign * detail::struve_series(nu, ax);
    return sign * (std::cyl_neumann(static_cast<double>(nu), ax) +
                   detail::struve_minus_neumann_asymptotic(nu, ax));
}

}  // namespace qwclock::special
