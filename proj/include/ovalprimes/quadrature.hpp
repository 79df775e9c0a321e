#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

#include "ovalprimes/errors.hpp"

namespace ovalprimes {

struct QuadResult {
    std::complex<double> value;
    double error;            // estimated absolute error
    std::size_t panels;      // panels in the final partition
};

namespace detail {

// (G7, K15) Gauss-Kronrod pair, QUADPACK abscissae/weights.
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
void gk15(F& f, double lo, double hi, std::complex<double>& value, double& err) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    std::complex<double> fc = f(mid);
    std::complex<double> kron = gk_wk[7] * fc;
    std::complex<double> gauss = gk_wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk_x[i];
        std::complex<double> fsum = f(mid - dx) + f(mid + dx);
        kron += gk_wk[i] * fsum;
        if (i % 2 == 1) gauss += gk_wg[i / 2] * fsum;
    }
    value = kron * half;
    err = std::abs((kron - gauss) * half);
}

struct Panel {
    double lo, hi, err;
    std::complex<double> value;
    bool operator<(const Panel& o) const {
        return err != o.err ? err < o.err : lo > o.lo;
    }
};

} // namespace detail

// Adaptive Gauss-Kronrod integration of a complex-valued integrand over
// [lo, hi] to absolute tolerance abs_tol.  max_panel_width > 0 caps the
// initial uniform panel width (used to resolve oscillation); panels are
// then bisected worst-first.  Throws quadrature_error if the budget runs
// out before the tolerance is met.
template <class F>
QuadResult integrate_gk(F&& f, double lo, double hi, double abs_tol,
                        double max_panel_width = 0.0,
                        std::size_t max_panels = 400000) {
    QuadResult out{0.0, 0.0, 0};
    if (!(hi > lo)) return out;

    std::size_t n0 = 1;
    if (max_panel_width > 0.0)
        n0 = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / max_panel_width)));
    n0 = std::min(n0, max_panels);

    std::priority_queue<detail::Panel> queue;
    double total_err = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n0; ++i) {
        detail::Panel p;
        p.lo = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n0);
        p.hi = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(n0);
        detail::gk15(f, p.lo, p.hi, p.value, p.err);
        total_err += p.err;
        queue.push(p);
        ++count;
    }

    while (total_err > abs_tol && count < max_panels) {
        detail::Panel worst = queue.top();
        if (worst.err <= 0.0) break;
        double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) break;  // interval at fp resolution
        queue.pop();
        total_err -= worst.err;
        detail::Panel a{worst.lo, mid, 0.0, 0.0}, b{mid, worst.hi, 0.0, 0.0};
        detail::gk15(f, a.lo, a.hi, a.value, a.err);
        detail::gk15(f, b.lo, b.hi, b.value, b.err);
        total_err += a.err + b.err;
        queue.push(a);
        queue.push(b);
        ++count;
    }

    // Drain into position order so the final sum has a fixed association.
    std::vector<detail::Panel> panels;
    panels.reserve(count);
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const detail::Panel& a, const detail::Panel& b) { return a.lo < b.lo; });

    std::complex<double> sum = 0.0;
    double err = 0.0;
    for (const auto& p : panels) {
        sum += p.value;
        err += p.err;
    }
    out.value = sum;
    out.error = err;
    out.panels = panels.size();
    if (err > abs_tol)
        throw quadrature_error("integrate_gk: tolerance not met", err);
    return out;
}

template <class F>
double integrate_gk_real(F&& f, double lo, double hi, double abs_tol,
                         double max_panel_width = 0.0) {
    auto wrap = [&f](double x) { return std::complex<double>(f(x), 0.0); };
    return integrate_gk(wrap, lo, hi, abs_tol, max_panel_width).value.real();
}

} // namespace ovalprimes
