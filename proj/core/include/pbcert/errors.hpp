#pragma once

#include <stdexcept>
#include <string>

namespace pbcert {

// Error taxonomy, one class per CLI exit code (parse 2, limit 3, domain 4,
// internal 5).

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(message + " at " + std::to_string(line) + ":" +
                             std::to_string(column)),
          line_(line),
          column_(column) {}
    explicit ParseError(const std::string& message)
        : std::runtime_error(message), line_(0), column_(0) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// An iteration or search budget ran out (enlarge the caps and retry).
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug, never bad user input.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pbcert
