#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitkit/quotient.hpp"

namespace orbitkit::cli {

/// Malformed user input (literals, flag combinations). Mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complex literal `re,imi`, e.g. "1,0i" or "-2.5,3e-1i". Whitespace is
/// stripped before parsing. Throws UsageError naming the offending token.
cplx parse_complex(const std::string& token);

/// Three complex literals separated by ';' -> a w-frame point.
Point3C parse_point_w(const std::string& text);

/// Two complex literals and one real literal separated by ';'.
Target parse_target(const std::string& text);

/**
 * Run the command line given argv (without the program name), writing results
 * to `out` and diagnostics to `err`.
 * Exit codes: 0 success / suites passed, 1 suite failure or computational
 * breakdown, 2 usage or parse error.
 */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace orbitkit::cli
