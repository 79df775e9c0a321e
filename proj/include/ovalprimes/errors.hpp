#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ovalprimes {

// Requested route does not exist for this domain kind (e.g. closed-form
// Mellin transform of a Cassini oval).
struct capability_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed input file.  line == 0 when no line number applies.
struct load_error : std::runtime_error {
    explicit load_error(const std::string& msg, std::size_t line_no = 0)
        : std::runtime_error(line_no ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
    std::size_t line;
};

// Adaptive quadrature ran out of subdivisions; carries the error it reached.
struct quadrature_error : std::runtime_error {
    quadrature_error(const std::string& msg, double err)
        : std::runtime_error(msg + ": achieved error " + std::to_string(err)),
          achieved(err) {}
    double achieved;
};

} // namespace ovalprimes
