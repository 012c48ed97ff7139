#pragma once

#include <stdexcept>
#include <string>

namespace ecq {

/// Raised when a request exceeds a solver's enumeration guard
/// (2^n or C(n,tau) too large). The CLI maps this to exit code 3.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge-list / QUBO-file parse failure, carrying the 1-based line number.
struct ParseError : std::invalid_argument {
    ParseError(int line_no, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    int line;
};

}  // namespace ecq
