#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ovalprimes/quadrature.hpp"

namespace ovalprimes {

enum class DomainKind { ellipse, cassini, superellipse, triangle };

// A planar domain symmetric under (x,y) -> (+-x,+-y), stored as its
// first-quadrant boundary graph y = f(x), x in [0,a], with inverse
// x = g(y), y in [0,b].  Immutable after construction; all members are
// pure and safe to share across threads.
//
// Kinds:
//   ellipse(a,b)       f(x) = b sqrt(1-(x/a)^2)
//   cassini(alpha,beta) quartic oval, convex iff beta > sqrt(2) alpha
//   superellipse(k)    f(x) = (1-x^{2k})^{1/(2k)}, curvature vanishes at
//                      the axis vertices
//   triangle           f(x) = 1-x; the symmetrized domain is |x|+|y| <= 1
class DomainSpec {
public:
    static DomainSpec ellipse(double a, double b) {
        require(a > 0.0 && std::isfinite(a), "ellipse: a must be positive");
        require(b > 0.0 && std::isfinite(b), "ellipse: b must be positive");
        DomainSpec d;
        d.kind_ = DomainKind::ellipse;
        d.a_ = a;
        d.b_ = b;
        d.kappa_a0_ = a / (b * b);
        d.kappa_0b_ = b / (a * a);
        d.has_closed_mellin_ = true;
        d.label_ = (a == 1.0 && b == 1.0)
                       ? "circle"
                       : "ellipse:a=" + format_num(a) + ",b=" + format_num(b);
        d.finish();
        return d;
    }

    static DomainSpec circle() { return ellipse(1.0, 1.0); }

    static DomainSpec cassini(double alpha, double beta) {
        require(alpha > 0.0 && std::isfinite(alpha), "cassini: alpha must be positive");
        require(beta > 0.0 && std::isfinite(beta), "cassini: beta must be positive");
        if (beta <= alpha)
            throw std::invalid_argument("cassini: beta <= alpha gives two disconnected curves");
        if (beta <= std::sqrt(2.0) * alpha)
            throw std::invalid_argument(
                "cassini: non-convex for beta <= sqrt(2)*alpha (dog-bone), need beta > sqrt(2)*alpha");
        DomainSpec d;
        d.kind_ = DomainKind::cassini;
        d.alpha_ = alpha;
        d.beta_ = beta;
        d.a_ = std::sqrt(beta * beta + alpha * alpha);
        d.b_ = std::sqrt(beta * beta - alpha * alpha);
        const double b2 = beta * beta, a2 = alpha * alpha;
        d.kappa_a0_ = (b2 + 2.0 * a2) / (b2 * d.a_);
        d.kappa_0b_ = (b2 - 2.0 * a2) / (b2 * d.b_);
        d.has_closed_mellin_ = false;
        d.label_ = "cassini:alpha=" + format_num(alpha) + ",beta=" + format_num(beta);
        d.finish();
        return d;
    }

    static DomainSpec superellipse(int k) {
        if (k < 2 || k > 32)
            throw std::invalid_argument("superellipse: k must be an integer in [2,32]");
        DomainSpec d;
        d.kind_ = DomainKind::superellipse;
        d.k_ = k;
        d.a_ = d.b_ = 1.0;
        d.kappa_a0_ = d.kappa_0b_ = 0.0;  // vanishes to order 2k-2
        d.has_closed_mellin_ = true;
        d.label_ = "superellipse:k=" + std::to_string(k);
        d.finish();
        return d;
    }

    static DomainSpec triangle() {
        DomainSpec d;
        d.kind_ = DomainKind::triangle;
        d.a_ = d.b_ = 1.0;
        d.kappa_a0_ = d.kappa_0b_ = 0.0;
        d.has_closed_mellin_ = true;
        d.label_ = "triangle";
        d.finish();
        return d;
    }

    // CLI grammar: "circle" | "ellipse:a=<f>,b=<f>" | "cassini:alpha=<f>,beta=<f>"
    //            | "superellipse:k=<int>" | "triangle"
    static DomainSpec parse(std::string_view text);

    DomainKind kind() const { return kind_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double kappa_a0() const { return kappa_a0_; }
    double kappa_0b() const { return kappa_0b_; }
    bool has_closed_mellin() const { return has_closed_mellin_; }
    double area() const { return area_; }
    const std::string& name() const { return label_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    int superellipse_k() const { return k_; }

    bool is_oval() const {
        return kind_ == DomainKind::ellipse || kind_ == DomainKind::cassini;
    }

    // Exponent q such that x = a - t^q makes f(a - t^q) smooth in t.
    int vertex_exponent() const {
        switch (kind_) {
            case DomainKind::superellipse: return 2 * k_;
            case DomainKind::triangle: return 1;
            default: return 2;
        }
    }

    // First-quadrant boundary height y = f(x), x in [0,a].
    double boundary_f(double x) const {
        if (!(x >= 0.0 && x <= a_))
            throw std::domain_error(label_ + ": boundary_f argument " + format_num(x) +
                                    " outside [0," + format_num(a_) + "]");
        switch (kind_) {
            case DomainKind::ellipse: {
                const double u = x / a_;
                return b_ * std::sqrt(std::max(0.0, 1.0 - u * u));
            }
            case DomainKind::cassini: {
                const double s = std::sqrt(4.0 * alpha_ * alpha_ * x * x +
                                           beta_ * beta_ * beta_ * beta_);
                return std::sqrt(std::max(0.0, s - alpha_ * alpha_ - x * x));
            }
            case DomainKind::superellipse:
                return std::pow(std::max(0.0, 1.0 - pow_2k(x)), 1.0 / (2.0 * k_));
            case DomainKind::triangle:
                return 1.0 - x;
        }
        return 0.0;
    }

    // Inverse graph x = g(y), y in [0,b]; closed form for every kind.
    double boundary_g(double y) const {
        if (!(y >= 0.0 && y <= b_))
            throw std::domain_error(label_ + ": boundary_g argument " + format_num(y) +
                                    " outside [0," + format_num(b_) + "]");
        switch (kind_) {
            case DomainKind::ellipse: {
                const double u = y / b_;
                return a_ * std::sqrt(std::max(0.0, 1.0 - u * u));
            }
            case DomainKind::cassini: {
                const double s = std::sqrt(std::max(
                    0.0, beta_ * beta_ * beta_ * beta_ - 4.0 * alpha_ * alpha_ * y * y));
                return std::sqrt(std::max(0.0, alpha_ * alpha_ - y * y + s));
            }
            case DomainKind::superellipse:
                return std::pow(std::max(0.0, 1.0 - pow_2k(y)), 1.0 / (2.0 * k_));
            case DomainKind::triangle:
                return 1.0 - y;
        }
        return 0.0;
    }

    // Signed curvature of the boundary at (x, f(x)), valid on [0, a).
    // Blows up numerically as x -> a for ovals; use kappa_a0() there.
    double curvature_at(double x) const {
        if (!(x >= 0.0 && x < a_))
            throw std::domain_error(label_ + ": curvature_at argument outside [0,a)");
        const double fp = f_prime(x);
        const double fpp = f_second(x);
        return -fpp / std::pow(1.0 + fp * fp, 1.5);
    }

    double f_prime(double x) const {
        const double f = boundary_f(x);
        switch (kind_) {
            case DomainKind::ellipse:
                return -b_ * b_ * x / (a_ * a_ * f);
            case DomainKind::cassini: {
                const double s = std::sqrt(4.0 * alpha_ * alpha_ * x * x +
                                           beta_ * beta_ * beta_ * beta_);
                const double dF = 4.0 * alpha_ * alpha_ * x / s - 2.0 * x;
                return dF / (2.0 * f);
            }
            case DomainKind::superellipse:
                return -std::pow(x, 2.0 * k_ - 1.0) * std::pow(f, 1.0 - 2.0 * k_);
            case DomainKind::triangle:
                return -1.0;
        }
        return 0.0;
    }

    double f_second(double x) const {
        const double f = boundary_f(x);
        switch (kind_) {
            case DomainKind::ellipse: {
                const double b2 = b_ * b_;
                return -b2 * b2 / (a_ * a_ * f * f * f);
            }
            case DomainKind::cassini: {
                const double beta4 = beta_ * beta_ * beta_ * beta_;
                const double s = std::sqrt(4.0 * alpha_ * alpha_ * x * x + beta4);
                const double ddF = 4.0 * alpha_ * alpha_ * beta4 / (s * s * s) - 2.0;
                const double fp = f_prime(x);
                return (ddF - 2.0 * fp * fp) / (2.0 * f);
            }
            case DomainKind::superellipse:
                return -(2.0 * k_ - 1.0) * std::pow(x, 2.0 * k_ - 2.0) *
                       std::pow(f, 1.0 - 4.0 * k_);
            case DomainKind::triangle:
                return 0.0;
        }
        return 0.0;
    }

private:
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    }

    static std::string format_num(double v) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }

    double pow_2k(double x) const {
        double p = x * x;  // x^2
        double r = 1.0;
        int e = k_;
        while (e > 0) {  // p^k by squaring
            if (e & 1) r *= p;
            p *= p;
            e >>= 1;
        }
        return r;
    }

    void finish() { area_ = compute_area(); }

    double compute_area() const {
        const int q = vertex_exponent();
        const double t_max = std::pow(a_, 1.0 / q);
        auto integrand = [this, q](double t) {
            const double x = std::max(0.0, a_ - std::pow(t, static_cast<double>(q)));
            return boundary_f(std::min(x, a_)) * q * std::pow(t, static_cast<double>(q - 1));
        };
        const double tol = std::max(1e-13, 4e-12 * a_ * b_);
        return 4.0 * integrate_gk_real(integrand, 0.0, t_max, tol);
    }

    DomainKind kind_ = DomainKind::ellipse;
    double a_ = 1.0, b_ = 1.0;
    double alpha_ = 0.0, beta_ = 0.0;
    int k_ = 0;
    double kappa_a0_ = 0.0, kappa_0b_ = 0.0;
    double area_ = 0.0;
    bool has_closed_mellin_ = false;
    std::string label_;
};

// Max over a geometric grid x -> a of |f(x)/sqrt(2(a-x)/kappa) - 1|/(a-x);
// bounded for ovals (the boundary behaves like a parabola at the vertex).
// Not applicable when the vertex curvature vanishes.
inline std::optional<double> vertex_expansion_check(const DomainSpec& dom) {
    if (!dom.is_oval()) return std::nullopt;
    const double a = dom.a();
    const double kappa = dom.kappa_a0();
    double worst = 0.0;
    for (int j = 16; j <= 96; ++j) {
        const double delta = a * std::pow(10.0, -j / 16.0);  // a/10 .. a*1e-6
        const double model = std::sqrt(2.0 * delta / kappa);
        const double defect = std::fabs(dom.boundary_f(a - delta) / model - 1.0) / delta;
        worst = std::max(worst, defect);
    }
    return worst;
}

namespace detail {

inline double parse_double_field(std::string_view tok, std::string_view key) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || tok.substr(0, eq) != key)
        throw std::invalid_argument("domain spec: expected '" + std::string(key) +
                                    "=<value>', got '" + std::string(tok) + "'");
    const std::string_view val = tok.substr(eq + 1);
    double out = 0.0;
    const auto res = std::from_chars(val.data(), val.data() + val.size(), out);
    if (res.ec != std::errc{} || res.ptr != val.data() + val.size())
        throw std::invalid_argument("domain spec: bad number '" + std::string(val) +
                                    "' in token '" + std::string(tok) + "'");
    return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto p = s.find(sep);
        if (p == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, p));
        s.remove_prefix(p + 1);
    }
}

} // namespace detail

inline DomainSpec DomainSpec::parse(std::string_view text) {
    if (text == "circle") return circle();
    if (text == "triangle") return triangle();
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("domain spec: unknown domain '" + std::string(head) +
                                    "' (expected circle, ellipse, cassini, superellipse, triangle)");
    }
    const auto fields = detail::split(text.substr(colon + 1), ',');
    if (head == "ellipse") {
        if (fields.size() != 2)
            throw std::invalid_argument("domain spec: ellipse takes a=<f>,b=<f>");
        return ellipse(detail::parse_double_field(fields[0], "a"),
                       detail::parse_double_field(fields[1], "b"));
    }
    if (head == "cassini") {
        if (fields.size() != 2)
            throw std::invalid_argument("domain spec: cassini takes alpha=<f>,beta=<f>");
        return cassini(detail::parse_double_field(fields[0], "alpha"),
                       detail::parse_double_field(fields[1], "beta"));
    }
    if (head == "superellipse") {
        if (fields.size() != 1)
            throw std::invalid_argument("domain spec: superellipse takes k=<int>");
        const double kf = detail::parse_double_field(fields[0], "k");
        const int k = static_cast<int>(kf);
        if (static_cast<double>(k) != kf)
            throw std::invalid_argument("domain spec: superellipse k must be an integer");
        return superellipse(k);
    }
    throw std::invalid_argument("domain spec: unknown domain '" + std::string(head) + "'");
}

} // namespace ovalprimes
