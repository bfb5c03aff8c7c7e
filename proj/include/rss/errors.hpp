#pragma once

#include <stdexcept>
#include <string>

namespace rss {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (bad token, wrong field count, missing section).
/// `line` is 1-based when known, 0 otherwise.
struct ParseError : Error {
    int line;
    explicit ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

/// Structurally well-formed input that violates a domain invariant
/// (duplicate POD in a solution, unknown node id, empty argument, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// No compliant plan can exist (demand above capacity, POD out of reach).
struct InfeasibleError : Error {
    using Error::Error;
};

/// Unusable configuration (no RSS sites, nonpositive limits, oracle guard).
struct ConfigError : Error {
    using Error::Error;
};

/// Internal safety cap tripped; indicates a bug rather than bad input.
struct LimitError : Error {
    using Error::Error;
};

}  // namespace rss
