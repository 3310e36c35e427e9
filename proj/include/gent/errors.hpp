#pragma once

#include <stdexcept>
#include <string>

namespace gent {

// Raised by the text-format parsers. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Raised when an operation would exceed its enumeration or LP budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a cross-base LogValue comparison cannot be separated at the
// configured precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gent
