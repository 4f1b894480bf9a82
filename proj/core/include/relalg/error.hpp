#pragma once

#include <stdexcept>
#include <string>

namespace relalg {

/// Raised when an operation is called outside its precondition (bad sizes,
/// mismatched algebras, hypotheses of a probe not met).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed algebra or network text. Carries a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             message),
          line_(line),
          column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace relalg
