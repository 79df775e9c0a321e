#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <string_view>

#include "ovalprimes/errors.hpp"
#include "ovalprimes/geometry.hpp"
#include "ovalprimes/numerics.hpp"
#include "ovalprimes/quadrature.hpp"
#include "ovalprimes/special_functions.hpp"
#include "ovalprimes/zeros.hpp"

namespace ovalprimes {

using Complex = std::complex<double>;

// The two boundary Mellin transforms
//   I1(rho) = int_0^a f(x) x^{rho-1} dx,   I2(rho) = int_0^b g(y) y^{rho-1} dy,
// evaluated on the critical line rho = 1/2 + i gamma (and at rho = 1 for the
// area term).

enum class MellinMethod { automatic, numeric, closed_form, asymptotic };

inline std::string_view to_string(MellinMethod m) {
    switch (m) {
        case MellinMethod::automatic: return "automatic";
        case MellinMethod::numeric: return "numeric";
        case MellinMethod::closed_form: return "closed_form";
        case MellinMethod::asymptotic: return "asymptotic";
    }
    return "?";
}

struct MellinValue {
    Complex rho;
    Complex I1;
    Complex I2;
    MellinMethod method = MellinMethod::automatic;  // method actually used
    Complex sum() const { return I1 + I2; }
};

// Quadrature tolerance schedule: panel count grows linearly in gamma, so
// past gamma = 1e3 the target loosens to keep batch scans affordable.
inline double default_mellin_tol(double gamma) {
    return std::fabs(gamma) <= 1.0e3 ? 1.0e-10 : 1.0e-8;
}

// Beta-function closed forms (ellipse, superellipse, triangle).
inline Complex mellin_closed_form(const DomainSpec& dom, int which, Complex rho) {
    if (which != 1 && which != 2) throw std::invalid_argument("mellin: which must be 1 or 2");
    switch (dom.kind()) {
        case DomainKind::ellipse: {
            // x = a sqrt(z) turns I1 into (b a^rho / 2) B(3/2, rho/2)
            const double len = which == 1 ? dom.a() : dom.b();
            const double other = which == 1 ? dom.b() : dom.a();
            return 0.5 * other * std::exp(rho * std::log(len)) * beta(1.5, 0.5 * rho);
        }
        case DomainKind::superellipse: {
            const double tk = 2.0 * dom.superellipse_k();
            return beta(1.0 + 1.0 / tk, rho / tk) / tk;
        }
        case DomainKind::triangle:
            return 1.0 / (rho * (rho + 1.0));
        case DomainKind::cassini:
            throw capability_error(
                "mellin_closed_form: no closed form for cassini; use mellin_numeric");
    }
    return 0.0;
}

// Vertex-curvature leading term, principal branch of rho^{3/2}.
inline Complex mellin_asymptotic(const DomainSpec& dom, int which, Complex rho) {
    if (which != 1 && which != 2) throw std::invalid_argument("mellin: which must be 1 or 2");
    if (!dom.is_oval())
        throw capability_error("mellin_asymptotic: vertex curvature vanishes for " + dom.name());
    const double len = which == 1 ? dom.a() : dom.b();
    const double kappa = which == 1 ? dom.kappa_a0() : dom.kappa_0b();
    const Complex len_pow = std::exp((0.5 + rho) * std::log(len));
    const Complex rho_32 = std::exp(1.5 * std::log(rho));
    return std::sqrt(M_PI / (2.0 * kappa)) * len_pow / rho_32;
}

// Adaptive quadrature route, valid for every kind.  The interval is split
// at the midpoint of the axis: the left half goes through u = log x (which
// freezes the local oscillation frequency of x^{i gamma} at |gamma| and
// absorbs the x^{sigma-1} endpoint singularity), the right half through
// x = L - t^q with the kind's vertex exponent q (which makes the boundary
// graph smooth at the vertex).
inline Complex mellin_numeric(const DomainSpec& dom, int which, Complex rho, double tol) {
    if (which != 1 && which != 2) throw std::invalid_argument("mellin: which must be 1 or 2");
    if (!(tol > 0.0)) throw std::invalid_argument("mellin_numeric: tol must be positive");
    const double sigma = rho.real();
    if (!(sigma > 0.0 && sigma <= 2.0))
        throw std::domain_error("mellin_numeric: Re rho outside (0,2]");
    const double gamma = rho.imag();
    const double len = which == 1 ? dom.a() : dom.b();
    const double height = which == 1 ? dom.b() : dom.a();  // value of the graph at 0
    auto graph = [&dom, which](double x) {
        return which == 1 ? dom.boundary_f(x) : dom.boundary_g(x);
    };

    const double cut = 0.5 * len;

    // left part: u = log x on [u_min, log cut]; the discarded tail below
    // x_min is bounded by height * x_min^sigma / sigma <= tol/4
    const double u_min = std::log(sigma * tol / (4.0 * height)) / sigma;
    const double u_max = std::log(cut);
    Complex left = 0.0;
    if (u_max > u_min) {
        auto f_left = [&](double u) {
            return graph(std::exp(u)) * std::exp(rho * u);
        };
        const double cap = gamma != 0.0 ? (2.0 * M_PI / std::fabs(gamma)) / 8.0 : 0.0;
        left = integrate_gk(f_left, u_min, u_max, 0.375 * tol, cap).value;
    }

    // right part: x = len - t^q on t in [0, (len-cut)^{1/q}]
    const int q = dom.vertex_exponent();
    const double t_max = std::pow(len - cut, 1.0 / q);
    auto f_right = [&](double t) {
        const double tq = std::pow(t, static_cast<double>(q));
        const double x = std::min(std::max(len - tq, 0.0), len);
        const double w = q * std::pow(t, static_cast<double>(q - 1));
        return graph(x) * std::exp((rho - 1.0) * std::log(x)) * w;
    };
    double cap_r = 0.0;
    if (gamma != 0.0) {
        const double omega_max =
            std::fabs(gamma) * q * std::pow(t_max, static_cast<double>(q - 1)) / cut;
        cap_r = (2.0 * M_PI / omega_max) / 8.0;
    }
    const Complex right = integrate_gk(f_right, 0.0, t_max, 0.375 * tol, cap_r).value;

    return left + right;
}

// Dispatch: closed form when the kind has one, quadrature otherwise.
inline MellinValue mellin_value(const DomainSpec& dom, Complex rho,
                                MellinMethod method = MellinMethod::automatic) {
    MellinValue v;
    v.rho = rho;
    MellinMethod chosen = method;
    if (method == MellinMethod::automatic)
        chosen = dom.has_closed_mellin() ? MellinMethod::closed_form : MellinMethod::numeric;
    switch (chosen) {
        case MellinMethod::closed_form:
            v.I1 = mellin_closed_form(dom, 1, rho);
            v.I2 = mellin_closed_form(dom, 2, rho);
            break;
        case MellinMethod::numeric: {
            const double tol = default_mellin_tol(rho.imag());
            v.I1 = mellin_numeric(dom, 1, rho, tol);
            v.I2 = mellin_numeric(dom, 2, rho, tol);
            break;
        }
        case MellinMethod::asymptotic:
            v.I1 = mellin_asymptotic(dom, 1, rho);
            v.I2 = mellin_asymptotic(dom, 2, rho);
            break;
        case MellinMethod::automatic: break;  // unreachable
    }
    v.method = chosen;
    return v;
}

// Cosine-sum amplitude and phase attached to the zero at gamma:
//   B(gamma) = 8 |I1 + I2|,   phi = arg(-I1 - I2) in (-pi, pi].
inline double amplitude_B(const DomainSpec& dom, double gamma,
                          MellinMethod method = MellinMethod::automatic) {
    if (!(gamma > 0.0)) throw std::domain_error("amplitude_B: gamma must be positive");
    return 8.0 * std::abs(mellin_value(dom, Complex(0.5, gamma), method).sum());
}

inline double phase_phi(const DomainSpec& dom, double gamma,
                        MellinMethod method = MellinMethod::automatic) {
    if (!(gamma > 0.0)) throw std::domain_error("phase_phi: gamma must be positive");
    return std::arg(-mellin_value(dom, Complex(0.5, gamma), method).sum());
}

// Batch CSV for plotting / the distribution pipeline: "gamma,B,phi,method".
inline void write_amplitude_csv(std::ostream& out, const DomainSpec& dom, const ZeroList& zeros,
                                MellinMethod method = MellinMethod::automatic) {
    out << "gamma,B,phi,method\n";
    for (double g : zeros.gammas()) {
        const MellinValue v = mellin_value(dom, Complex(0.5, g), method);
        const Complex z = v.sum();
        out << format_g17(g) << ',' << format_g17(8.0 * std::abs(z)) << ','
            << format_g17(std::arg(-z)) << ',' << to_string(v.method) << '\n';
    }
}

} // namespace ovalprimes
