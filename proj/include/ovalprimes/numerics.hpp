#pragma once

#include <cstdio>
#include <string>
#include <string_view>

namespace ovalprimes {

inline constexpr std::string_view version = "0.1.0";

// Kahan compensated accumulator.  Used for every Lambda-weighted sum so
// results do not depend on how loops are split.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Shortest-precision decimal that round-trips a double (17 significant digits).
inline std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace ovalprimes
