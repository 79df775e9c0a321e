#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ovalprimes/geometry.hpp"
#include "ovalprimes/numerics.hpp"
#include "ovalprimes/sieve.hpp"

namespace ovalprimes {

namespace detail {

// Closed membership test (m,n) in R*Omega through the implicit boundary
// polynomial, evaluated in long double.  Monotone in n for fixed m, so it
// can arbitrate lattice points the floating-point boundary leaves ambiguous.
inline bool inside_dilate(const DomainSpec& dom, double R, std::uint64_t m, std::uint64_t n) {
    const long double lm = static_cast<long double>(m);
    const long double ln = static_cast<long double>(n);
    const long double lr = static_cast<long double>(R);
    switch (dom.kind()) {
        case DomainKind::ellipse: {
            const long double la = dom.a(), lb = dom.b();
            return lm * lm * lb * lb + ln * ln * la * la <= lr * lr * la * la * lb * lb;
        }
        case DomainKind::cassini: {
            const long double ar = static_cast<long double>(dom.alpha()) * lr;
            const long double br = static_cast<long double>(dom.beta()) * lr;
            const long double d1 = (lm - ar) * (lm - ar) + ln * ln;
            const long double d2 = (lm + ar) * (lm + ar) + ln * ln;
            return d1 * d2 <= br * br * br * br;
        }
        case DomainKind::superellipse: {
            const long double e = 2.0L * dom.superellipse_k();
            return std::pow(lm, e) + std::pow(ln, e) <= std::pow(lr, e);
        }
        case DomainKind::triangle:
            return lm + ln <= lr;
    }
    return false;
}

// Largest n >= 0 with (m,n) in R*Omega.  Floating-point boundary with a
// one-ulp-style guard; lattice points inside the guard band are settled by
// the implicit polynomial test above.
inline std::uint64_t inner_limit(const DomainSpec& dom, double R, std::uint64_t m) {
    const double eps = 1e-9 * R;
    double x = static_cast<double>(m) / R;
    if (x > dom.a()) x = dom.a();
    const double y_hi = R * dom.boundary_f(x) + eps;
    if (y_hi < 1.0) {
        // possibly still a boundary point at n = 1 if the guard undershot
        return inside_dilate(dom, R, m, 1) ? 1 : 0;
    }
    std::uint64_t n = static_cast<std::uint64_t>(y_hi);
    const double frac = y_hi - static_cast<double>(n);
    if (frac > 2.0 * eps && 1.0 - frac > 2.0 * eps) return n;  // unambiguous

    int steps = 0;
    while (inside_dilate(dom, R, m, n + 1)) {
        ++n;
        if (++steps > 8) throw std::logic_error("inner_limit: boundary refinement diverged");
    }
    while (n >= 1 && !inside_dilate(dom, R, m, n)) {
        --n;
        if (++steps > 8) throw std::logic_error("inner_limit: boundary refinement diverged");
    }
    return n;
}

inline std::uint64_t outer_limit(const DomainSpec& dom, double R, const MangoldtTable& table) {
    if (R * std::max(dom.a(), dom.b()) > static_cast<double>(table.limit()))
        throw std::domain_error("counting: table limit below R*max(a,b)");
    const double m_hi = dom.a() * R + 1e-9 * R;
    std::uint64_t m_max = static_cast<std::uint64_t>(std::max(0.0, m_hi));
    return std::min<std::uint64_t>(m_max, table.limit());
}

} // namespace detail

// Lambda-weighted prime-power point count of the closed dilate R*Omega:
//   psi_Omega(R) = 4 sum_{m <= aR} Lambda(m) sum_{n <= R f(m/R)} Lambda(n).
// Axis points carry weight zero, hence the pure first-quadrant sum.
inline double psi_omega(const DomainSpec& dom, double R, const MangoldtTable& table) {
    if (!(R > 0.0)) throw std::domain_error("psi_omega: R must be positive");
    const std::uint64_t m_max = detail::outer_limit(dom, R, table);
    KahanSum acc;
    for (std::uint64_t m = 2; m <= m_max; ++m) {
        const double lm = table.lambda(m);
        if (lm == 0.0) continue;
        const std::uint64_t n_max = detail::inner_limit(dom, R, m);
        if (n_max >= 2) acc.add(lm * table.psi(static_cast<double>(n_max)));
    }
    return 4.0 * acc.value();
}

// Number of lattice points of R*Omega with both |coordinates| prime.
inline std::uint64_t pi_omega(const DomainSpec& dom, double R, const MangoldtTable& table) {
    if (!(R > 0.0)) throw std::domain_error("pi_omega: R must be positive");
    const std::uint64_t m_max = detail::outer_limit(dom, R, table);
    std::uint64_t total = 0;
    for (std::uint64_t m = 2; m <= m_max; ++m) {
        if (!table.is_prime(m)) continue;
        const std::uint64_t n_max = detail::inner_limit(dom, R, m);
        if (n_max >= 2) total += table.prime_count(n_max);
    }
    return 4 * total;
}

// Normalized remainder H_Omega(R) = (psi_Omega(R) - area(Omega) R^2) / R^{3/2}.
inline double remainder_term(const DomainSpec& dom, double R, const MangoldtTable& table) {
    const double psi = psi_omega(dom, R, table);
    return (psi - dom.area() * R * R) / std::pow(R, 1.5);
}

enum class SamplingKind { log_uniform, explicit_list };

struct RemainderSamples {
    DomainSpec domain;
    std::vector<std::pair<double, double>> entries;  // (R, H), ascending in R
    SamplingKind sampling = SamplingKind::explicit_list;
    double x_min = 0.0, x_max = 0.0;

    // "R,H" rows at full double precision.
    void write_csv(std::ostream& out) const {
        out << "R,H\n";
        for (const auto& [r, h] : entries)
            out << format_g17(r) << ',' << format_g17(h) << '\n';
    }
};

// Deterministic log-uniform grid R_i = X_min (X_max/X_min)^{i/(count-1)},
// the empirical counterpart of the logarithmic measure dR/R.
inline RemainderSamples sample_remainder_log(const DomainSpec& dom, double x_min, double x_max,
                                             std::size_t count, const MangoldtTable& table) {
    if (!(x_min >= 2.0) || !(x_min < x_max))
        throw std::invalid_argument("sample_remainder_log: need 2 <= X_min < X_max");
    if (x_max * std::max(dom.a(), dom.b()) > static_cast<double>(table.limit()))
        throw std::invalid_argument("sample_remainder_log: X_max exceeds table capacity");
    if (count < 1) throw std::invalid_argument("sample_remainder_log: count must be >= 1");

    RemainderSamples out{dom, {}, SamplingKind::log_uniform, x_min, x_max};
    out.entries.reserve(count);
    const double ratio = x_max / x_min;
    for (std::size_t i = 0; i < count; ++i) {
        const double e = count == 1 ? 0.0
                                    : static_cast<double>(i) / static_cast<double>(count - 1);
        const double r = x_min * std::pow(ratio, e);
        out.entries.emplace_back(r, remainder_term(dom, r, table));
    }
    return out;
}

inline RemainderSamples remainder_at(const DomainSpec& dom, const std::vector<double>& rs,
                                     const MangoldtTable& table) {
    RemainderSamples out{dom, {}, SamplingKind::explicit_list, 0.0, 0.0};
    out.entries.reserve(rs.size());
    for (double r : rs) out.entries.emplace_back(r, remainder_term(dom, r, table));
    return out;
}

} // namespace ovalprimes
