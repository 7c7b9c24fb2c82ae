#pragma once

#include <stdexcept>
#include <string>

namespace dompoly {

// Requested computation exceeds a configured size cap (brute-force or
// product vertex capacity).  CLI maps this to exit code 3.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed graph expression or edge-list input.  CLI exit code 2.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

struct InvalidParameterError : std::invalid_argument {
    explicit InvalidParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A division that a formula guarantees to be exact left a remainder.
// Signals an implementation bug, not bad input.
struct InexactDivisionError : std::logic_error {
    explicit InexactDivisionError(const std::string& msg) : std::logic_error(msg) {}
};

struct TooFewTermsError : std::runtime_error {
    explicit TooFewTermsError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RejectedGammaError : std::invalid_argument {
    explicit RejectedGammaError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Interpolation in the reduction produced a non-integral coefficient,
// meaning the evaluation oracle answered inconsistently.
struct OracleInconsistencyError : std::runtime_error {
    explicit OracleInconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dompoly
