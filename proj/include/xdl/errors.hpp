#pragma once

#include <stdexcept>
#include <string>

namespace xdl {

/// Malformed input: bad token, wrong count, zero denominator, ...
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }
    std::size_t line_;
    std::size_t column_;
};

/// A mathematical precondition does not hold (e.g. operator not dimension-bounded).
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible vector/matrix dimensions.
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace xdl
