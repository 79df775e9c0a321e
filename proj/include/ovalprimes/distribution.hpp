#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ovalprimes/counting.hpp"
#include "ovalprimes/explicit_formula.hpp"
#include "ovalprimes/numerics.hpp"
#include "ovalprimes/special_functions.hpp"

namespace ovalprimes {

// Characteristic function of sum_n A_n cos(x_n) with independent uniform
// phases: product of J0(A_n s) over the terms of the cosine sum.
inline double char_product(const CosineSum& cs, double s) {
    double prod = 1.0;
    for (const CosineTerm& t : cs.terms) prod *= bessel_j0(t.amplitude * s);
    return prod;
}

// Fourier series of the limiting value density on [-A, A]:
//   p(u) = 1/(2A) + (1/A) sum_{k>=1} c_k cos(pi k u / A),
//   c_k  = prod_n J0(pi k A_n / A),  A = sum_n A_n.
struct DensitySeries {
    double support_A = 0.0;
    std::vector<double> coeffs;  // c_1 .. c_K
    std::string source;          // originating cosine sum (domain / term count)
    std::size_t K() const { return coeffs.size(); }
};

// Coefficients are evaluated through char_product at s = pi k / A, so the
// two representations agree identically.  Truncation: first k with
// |c_k| < eps, else k_max; the realized K is coeffs.size().
inline DensitySeries density_series(const CosineSum& cs, std::size_t k_max = 10000,
                                    double eps = 1e-12) {
    if (cs.terms.empty()) throw std::invalid_argument("density_series: empty cosine sum");
    if (k_max < 1 && !(eps > 0.0))
        throw std::invalid_argument("density_series: need k_max >= 1 or eps > 0");
    DensitySeries ds;
    ds.support_A = cs.amplitude_sum;
    ds.source = cs.domain.name() + "/" + std::to_string(cs.terms.size()) + " terms";
    if (!(ds.support_A > 0.0))
        throw std::invalid_argument("density_series: amplitude sum must be positive");
    ds.coeffs.reserve(std::min<std::size_t>(k_max, 4096));
    for (std::size_t k = 1; k <= k_max; ++k) {
        const double ck = char_product(cs, M_PI * static_cast<double>(k) / ds.support_A);
        ds.coeffs.push_back(ck);
        if (std::fabs(ck) < eps) break;
    }
    return ds;
}

// Series value at u; even in u by construction, identically 0 outside
// [-A, A].
inline double density_eval(const DensitySeries& ds, double u) {
    const double au = std::fabs(u);
    const double a = ds.support_A;
    if (au > a) return 0.0;
    const double w = M_PI * au / a;
    KahanSum acc;
    acc.add(0.5);
    for (std::size_t k = 0; k < ds.coeffs.size(); ++k)
        acc.add(ds.coeffs[k] * std::cos(w * static_cast<double>(k + 1)));
    return acc.value() / a;
}

// Termwise-integrated CDF: (x+A)/(2A) + sum_k c_k sin(pi k x/A)/(pi k).
inline double density_cdf(const DensitySeries& ds, double x) {
    const double a = ds.support_A;
    if (x <= -a) return 0.0;
    if (x >= a) return 1.0;
    const double w = M_PI * x / a;
    KahanSum acc;
    acc.add((x + a) / (2.0 * a));
    for (std::size_t k = 0; k < ds.coeffs.size(); ++k) {
        const double kk = static_cast<double>(k + 1);
        acc.add(ds.coeffs[k] * std::sin(w * kk) / (M_PI * kk));
    }
    return acc.value();
}

struct Histogram {
    std::vector<double> edges;   // bins + 1, strictly ascending
    std::vector<double> masses;  // bins, nonnegative, sums to 1
    std::size_t sample_count = 0;

    // "left_edge,right_edge,mass" rows at full double precision.
    void write_csv(std::ostream& out) const {
        out << "left_edge,right_edge,mass\n";
        for (std::size_t i = 0; i < masses.size(); ++i)
            out << format_g17(edges[i]) << ',' << format_g17(edges[i + 1]) << ','
                << format_g17(masses[i]) << '\n';
    }
};

inline Histogram empirical_hist(const std::vector<double>& values, std::size_t bins) {
    if (bins < 1) throw std::invalid_argument("empirical_hist: bins must be >= 1");
    if (values.empty()) throw std::invalid_argument("empirical_hist: need at least one sample");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it, hi = *hi_it;
    Histogram h;
    h.sample_count = values.size();
    if (lo == hi) {  // degenerate range: a single bin of unit mass
        h.edges = {lo - 0.5, hi + 0.5};
        h.masses = {1.0};
        return h;
    }
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    std::vector<std::size_t> counts(bins, 0);
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (double v : values) {
        auto idx = static_cast<std::size_t>((v - lo) * scale);
        if (idx >= bins) idx = bins - 1;  // v == hi lands in the last bin
        ++counts[idx];
    }
    h.masses.resize(bins);
    for (std::size_t i = 0; i < bins; ++i)
        h.masses[i] = static_cast<double>(counts[i]) / static_cast<double>(values.size());
    return h;
}

inline Histogram empirical_hist(const RemainderSamples& samples, std::size_t bins) {
    std::vector<double> hs;
    hs.reserve(samples.entries.size());
    for (const auto& [r, hval] : samples.entries) hs.push_back(hval);
    return empirical_hist(hs, bins);
}

// Kolmogorov-Smirnov-style sup distance between the binned empirical CDF
// and the analytic CDF of the series, evaluated at the bin edges.
inline double compare_ks(const Histogram& hist, const DensitySeries& ds) {
    const double a = ds.support_A;
    const double slack = 0.05 * a;
    if (hist.edges.front() < -a - slack || hist.edges.back() > a + slack)
        throw std::invalid_argument("compare_ks: histogram support extends beyond [-A,A] + 5%");
    double ks = 0.0;
    double cum = 0.0;
    for (std::size_t i = 0; i < hist.edges.size(); ++i) {
        ks = std::max(ks, std::fabs(cum - density_cdf(ds, hist.edges[i])));
        if (i < hist.masses.size()) cum += hist.masses[i];
    }
    return ks;
}

// Strict local maxima of the density on a uniform grid over [-A, A],
// plateaus merged, low-prominence peaks filtered.  The truncated Fourier
// series ripples at the scale of its last coefficient, so the prominence
// floor is 1e-4 of the peak or a few |c_K|/A, whichever is larger.
inline std::vector<std::pair<double, double>> detect_modes(const DensitySeries& ds,
                                                           std::size_t grid_points = 10000) {
    if (grid_points < 100) throw std::invalid_argument("detect_modes: need >= 100 grid points");
    const double a = ds.support_A;
    std::vector<double> u(grid_points), p(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        u[i] = -a + 2.0 * a * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        p[i] = density_eval(ds, u[i]);
    }
    const double p_max = *std::max_element(p.begin(), p.end());
    const double ripple = ds.coeffs.empty() ? 0.0 : 4.0 * std::fabs(ds.coeffs.back()) / a;
    const double min_prominence = std::max(1e-4 * p_max, ripple);

    std::vector<std::pair<double, double>> modes;
    std::size_t i = 1;
    while (i + 1 < grid_points) {
        if (!(p[i] > p[i - 1])) {
            ++i;
            continue;
        }
        std::size_t j = i;  // plateau [i, j]
        while (j + 1 < grid_points && p[j + 1] == p[i]) ++j;
        if (j + 1 < grid_points && p[i] > p[j + 1]) {
            // prominence: drop to the lowest valley before a higher value
            // is reached on each side
            double left_min = p[i];
            for (std::size_t l = i; l-- > 0 && p[l] <= p[i];) left_min = std::min(left_min, p[l]);
            double right_min = p[j];
            for (std::size_t r = j + 1; r < grid_points && p[r] <= p[i]; ++r)
                right_min = std::min(right_min, p[r]);
            if (p[i] - std::max(left_min, right_min) >= min_prominence) {
                const std::size_t mid = (i + j) / 2;
                modes.emplace_back(u[mid], p[mid]);
            }
        }
        i = j + 1;
    }
    return modes;
}

} // namespace ovalprimes
