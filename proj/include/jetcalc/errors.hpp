#pragma once

#include <stdexcept>
#include <string>

namespace jetcalc {

// Base class for everything thrown on purpose. Messages carry a module
// prefix ("algebra: ...") so callers can attribute nested failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural mismatch: wrong number of variables, coordinates, or coefficients.
struct ArityError : Error {
    using Error::Error;
};

// A documented precondition was violated (zero input, point off the variety, ...).
struct DomainError : Error {
    using Error::Error;
};

// A configured degree/size cap was hit. Never a silent truncation.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Randomized point sampling exhausted its trial budget.
struct SamplingError : Error {
    using Error::Error;
};

// Text input rejected; position is 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

} // namespace jetcalc
