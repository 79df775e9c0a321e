#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ovalprimes/errors.hpp"
#include "ovalprimes/numerics.hpp"

namespace ovalprimes {

// Positive imaginary parts of nontrivial zeta zeros, loaded from a text
// file (one decimal per line, ascending; '#' starts a comment line).
// Zeros are input data only; nothing in this project computes them.
class ZeroList {
public:
    static ZeroList load(const std::string& path,
                         std::size_t max_count = std::numeric_limits<std::size_t>::max()) {
        std::ifstream in(path);
        if (!in) throw load_error("cannot open zeros file: " + path);
        ZeroList z;
        z.source_ = path;
        std::string line;
        std::size_t line_no = 0;
        while (z.gammas_.size() < max_count && std::getline(in, line)) {
            ++line_no;
            std::size_t s = line.find_first_not_of(" \t\r");
            if (s == std::string::npos || line[s] == '#') continue;
            std::size_t e = line.find_last_not_of(" \t\r");
            double g = 0.0;
            const char* first = line.data() + s;
            const char* last = line.data() + e + 1;
            auto res = std::from_chars(first, last, g);
            if (res.ec != std::errc{} || res.ptr != last)
                throw load_error("unparseable zero '" + line.substr(s, e - s + 1) + "'", line_no);
            if (!(g > 0.0))
                throw load_error("zero must be positive, got " + format_g17(g), line_no);
            if (!z.gammas_.empty() && g <= z.gammas_.back())
                throw load_error("zeros out of order: " + format_g17(g) +
                                     " after " + format_g17(z.gammas_.back()),
                                 line_no);
            z.gammas_.push_back(g);
        }
        if (z.gammas_.empty()) throw load_error("zeros file has no entries: " + path);
        return z;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw load_error("cannot open zeros file for writing: " + path);
        for (double g : gammas_) out << format_g17(g) << '\n';
        if (!out) throw load_error("write failed: " + path);
    }

    std::span<const double> gammas() const { return gammas_; }
    std::size_t size() const { return gammas_.size(); }
    double operator[](std::size_t i) const { return gammas_[i]; }
    double max_gamma() const { return gammas_.back(); }
    const std::string& source() const { return source_; }

    ZeroList prefix(std::size_t n) const {
        ZeroList z;
        z.source_ = source_;
        z.gammas_.assign(gammas_.begin(), gammas_.begin() + std::min(n, gammas_.size()));
        return z;
    }

    std::size_t count_below(double t) const {
        return static_cast<std::size_t>(
            std::upper_bound(gammas_.begin(), gammas_.end(), t) - gammas_.begin());
    }

private:
    std::vector<double> gammas_;
    std::string source_;
};

// Relative deviation of #{gamma <= T} from the Riemann-von Mangoldt count
// (T/2pi) log(T/(2 pi e)) + 7/8.  A cheap integrity check on zero data.
inline double rvm_count_deviation(const ZeroList& zeros, double t) {
    if (t > zeros.max_gamma())
        throw std::domain_error("rvm_count_deviation: T beyond the loaded zeros");
    const std::size_t n = zeros.count_below(t);
    if (n < 100)
        throw std::domain_error("rvm_count_deviation: need at least 100 zeros below T");
    const double predicted = t / (2.0 * M_PI) * std::log(t / (2.0 * M_PI * M_E)) + 7.0 / 8.0;
    return std::fabs(static_cast<double>(n) - predicted) / static_cast<double>(n);
}

} // namespace ovalprimes
