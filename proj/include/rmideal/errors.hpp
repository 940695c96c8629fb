#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rmideal {

// Invalid argument to an operation (probability outside [0,1], vertex out of
// range, malformed event name, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A bound or formula evaluated outside the region where it is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Enumeration caps and size limits.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph/ideal input. line() is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace rmideal
