#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "ovalprimes/geometry.hpp"
#include "ovalprimes/mellin.hpp"
#include "ovalprimes/numerics.hpp"
#include "ovalprimes/zeros.hpp"

namespace ovalprimes {

struct CosineTerm {
    double gamma;      // zero ordinate
    double amplitude;  // B(gamma) >= 0
    double phase;      // in (-pi, pi]
};

// Truncated cosine-sum form of the explicit-formula remainder,
//   h(t) = sum_i B(gamma_i) cos(t gamma_i + phi_i),
// one term per zero of a ZeroList prefix.  h(log R) approximates the
// normalized remainder of the counting module.
struct CosineSum {
    DomainSpec domain;
    std::vector<CosineTerm> terms;
    double truncation_T = 0.0;   // largest gamma included
    double amplitude_sum = 0.0;  // partial sum of amplitudes (sup-norm bound)
    double tail_bound = 0.0;     // documented overestimate of the dropped amplitudes
    MellinMethod method = MellinMethod::automatic;
};

// Overestimate of sum_{gamma > T} B(gamma): fit the envelope constant
// c = max B gamma^{3/2} over the last quartile of the included terms, then
// integrate c u^{-3/2} against the zero density log(u/2pi)/2pi, giving
// c (log(T/2pi) + 2) / (pi sqrt(T)).
inline double estimate_tail_bound(std::span<const CosineTerm> terms) {
    if (terms.empty()) return 0.0;
    const std::size_t start = terms.size() - terms.size() / 4 - 1;
    double c = 0.0;
    for (std::size_t i = start; i < terms.size(); ++i)
        c = std::max(c, terms[i].amplitude * std::pow(terms[i].gamma, 1.5));
    const double t = terms.back().gamma;
    return c * (std::log(t / (2.0 * M_PI)) + 2.0) / (M_PI * std::sqrt(t));
}

inline CosineSum build_cosine_sum(const DomainSpec& dom, const ZeroList& zeros,
                                  MellinMethod method = MellinMethod::automatic) {
    if (zeros.size() == 0) throw std::invalid_argument("build_cosine_sum: empty zero list");
    CosineSum cs{dom, {}, 0.0, 0.0, 0.0, method};
    cs.terms.reserve(zeros.size());
    KahanSum amp_sum;
    for (double g : zeros.gammas()) {
        const MellinValue v = mellin_value(dom, Complex(0.5, g), method);
        const Complex z = v.sum();
        cs.method = v.method;
        const double amp = 8.0 * std::abs(z);
        cs.terms.push_back({g, amp, std::arg(-z)});
        amp_sum.add(amp);
    }
    cs.truncation_T = zeros.max_gamma();
    cs.amplitude_sum = amp_sum.value();
    cs.tail_bound = estimate_tail_bound(cs.terms);
    return cs;
}

inline double h_cosine(const CosineSum& cs, double t) {
    KahanSum acc;
    for (const CosineTerm& term : cs.terms)
        acc.add(term.amplitude * std::cos(t * term.gamma + term.phase));
    return acc.value();
}

// Truncated explicit-formula remainder
//   -4 sum_rho R^{rho - 1/2} (I1(rho) + I2(rho))
// with the conjugate zero pairs folded: -8 Re sum_{gamma>0} R^{i gamma} (I1+I2).
inline double h_tilde(const DomainSpec& dom, double R, const ZeroList& zeros,
                      MellinMethod method = MellinMethod::automatic) {
    if (!(R >= 2.0)) throw std::domain_error("h_tilde: R must be >= 2");
    const double t = std::log(R);
    KahanSum acc;
    for (double g : zeros.gammas()) {
        const Complex z = mellin_value(dom, Complex(0.5, g), method).sum();
        acc.add(-8.0 * (z.real() * std::cos(g * t) - z.imag() * std::sin(g * t)));
    }
    return acc.value();
}

} // namespace ovalprimes
