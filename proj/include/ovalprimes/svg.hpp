#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ovalprimes {

// Minimal self-contained SVG line plot (no plotting dependency): frame,
// linear ticks, one polyline per curve, legend.  Output is deterministic.
class SvgPlot {
public:
    SvgPlot(int width, int height, std::string title)
        : width_(width), height_(height), title_(std::move(title)) {}

    void add_curve(std::string name, std::vector<std::pair<double, double>> pts,
                   std::string color, bool dashed = false) {
        curves_.push_back({std::move(name), std::move(pts), std::move(color), dashed});
    }

    void write(std::ostream& out) const {
        double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
        double y_lo = x_lo, y_hi = -x_lo;
        for (const auto& c : curves_)
            for (const auto& [x, y] : c.points) {
                x_lo = std::min(x_lo, x); x_hi = std::max(x_hi, x);
                y_lo = std::min(y_lo, y); y_hi = std::max(y_hi, y);
            }
        if (!(x_hi > x_lo)) { x_lo -= 1.0; x_hi += 1.0; }
        if (!(y_hi > y_lo)) { y_lo -= 1.0; y_hi += 1.0; }
        const double y_pad = 0.05 * (y_hi - y_lo);
        y_lo -= y_pad; y_hi += y_pad;

        const double ml = 64, mr = 16, mt = 34, mb = 46;
        const double pw = width_ - ml - mr, ph = height_ - mt - mb;
        auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
        auto py = [&](double y) { return mt + (y_hi - y) / (y_hi - y_lo) * ph; };

        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
            << "\" height=\"" << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_
            << "\">\n";
        out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out << "<text x=\"" << width_ / 2 << "\" y=\"20\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"14\">" << title_ << "</text>\n";
        out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
            << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

        for (int i = 0; i <= 5; ++i) {
            const double fx = x_lo + (x_hi - x_lo) * i / 5.0;
            const double fy = y_lo + (y_hi - y_lo) * i / 5.0;
            out << "<line x1=\"" << px(fx) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(fx)
                << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
            out << "<text x=\"" << px(fx) << "\" y=\"" << mt + ph + 18
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
                << tick_label(fx) << "</text>\n";
            out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml
                << "\" y2=\"" << py(fy) << "\" stroke=\"black\"/>\n";
            out << "<text x=\"" << ml - 8 << "\" y=\"" << py(fy) + 4
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
                << tick_label(fy) << "</text>\n";
        }

        for (const auto& c : curves_) {
            out << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.4\"";
            if (c.dashed) out << " stroke-dasharray=\"6,4\"";
            out << " points=\"";
            for (const auto& [x, y] : c.points) out << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
            out << "\"/>\n";
        }

        double ly = mt + 16;
        for (const auto& c : curves_) {
            out << "<line x1=\"" << ml + pw - 150 << "\" y1=\"" << ly - 4 << "\" x2=\""
                << ml + pw - 120 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << c.color
                << "\" stroke-width=\"1.4\"" << (c.dashed ? " stroke-dasharray=\"6,4\"" : "")
                << "/>\n";
            out << "<text x=\"" << ml + pw - 114 << "\" y=\"" << ly
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << c.name << "</text>\n";
            ly += 16;
        }
        out << "</svg>\n";
    }

private:
    struct Curve {
        std::string name;
        std::vector<std::pair<double, double>> points;
        std::string color;
        bool dashed;
    };

    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return buf;
    }
    static std::string tick_label(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        return buf;
    }

    int width_, height_;
    std::string title_;
    std::vector<Curve> curves_;
};

} // namespace ovalprimes
