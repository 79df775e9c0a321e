#pragma once

#include <cmath>
#include <complex>

namespace ovalprimes {

// Bessel function of the first kind, order zero.  Power series below
// |x| = 14, Hankel asymptotic expansion above, both evaluated in long
// double; absolute error stays under ~5e-13 across the switch point.
inline double bessel_j0(double x) {
    const long double ax = std::fabs(static_cast<long double>(x));
    if (ax < 14.0L) {
        const long double q = -0.25L * ax * ax;
        long double term = 1.0L, sum = 1.0L;
        for (int k = 1; k < 80; ++k) {
            term *= q / (static_cast<long double>(k) * k);
            sum += term;
            if (std::fabs(term) < 1e-24L * std::fabs(sum)) break;
        }
        return static_cast<double>(sum);
    }

    // J0(x) = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4)) with
    // P = 1 - d2 + d4 - ..., Q = -(d1 - d3 + d5 - ...),
    // d_m = prod_{j<=m} (2j-1)^2 / (m! (8x)^m).  Truncated at the
    // smallest term (optimal truncation of the divergent series).
    const long double z = 8.0L * ax;
    long double d = 1.0L, prev = 1.0L;
    long double p = 1.0L, q = 0.0L;
    for (int m = 1; m < 48; ++m) {
        d *= static_cast<long double>(2 * m - 1) * (2 * m - 1) / (m * z);
        if (d > prev) break;
        prev = d;
        if (m & 1) {
            if (((m - 1) / 2) % 2 == 0) q -= d; else q += d;
        } else {
            if ((m / 2) % 2 == 0) p += d; else p -= d;
        }
        if (d < 1e-21L) break;
    }
    const long double chi = ax - 0.785398163397448309615660845819876L;
    const long double amp = std::sqrt(0.636619772367581343075535053490057L / ax);
    return static_cast<double>(amp * (p * std::cos(chi) - q * std::sin(chi)));
}

namespace detail {

// Lanczos g=7 n=9 coefficients.
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log(sin(pi z)) without overflow for large |Im z|.
inline std::complex<double> log_sin_pi(std::complex<double> z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    const std::complex<double> ipz = std::complex<double>(0.0, M_PI) * z;
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2 i),  |e^{2 i pi z}| <= 1;
    // log(-1/(2i)) = -log 2 + i pi/2
    return -ipz + std::log(1.0 - std::exp(2.0 * ipz)) +
           std::complex<double>(-M_LN2, M_PI_2);
}

} // namespace detail

// Principal-branch log-gamma for complex arguments (Lanczos approximation,
// reflection for Re z < 0.5).  Relative accuracy ~1e-13 away from poles.
inline std::complex<double> log_gamma(std::complex<double> z) {
    constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
    if (z.real() < 0.5) {
        // log pi - log sin(pi z) - log Gamma(1 - z); branch offsets cancel
        // wherever the result is exponentiated.
        return std::log(M_PI) - detail::log_sin_pi(z) - log_gamma(1.0 - z);
    }
    const std::complex<double> zm1 = z - 1.0;
    std::complex<double> acc = detail::lanczos_c[0];
    for (int i = 1; i < 9; ++i) acc += detail::lanczos_c[i] / (zm1 + static_cast<double>(i));
    const std::complex<double> t = zm1 + 7.5;
    return half_log_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

// Euler Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
inline std::complex<double> beta(std::complex<double> x, std::complex<double> y) {
    return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

} // namespace ovalprimes
