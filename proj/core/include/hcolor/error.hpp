#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Exhaustive enumeration would exceed the configured state budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An argument outside an operation's domain (out-of-range vertex, bad delta, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace hcolor
