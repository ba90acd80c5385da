#pragma once

#include <stdexcept>
#include <string>

namespace brooks {

// Malformed text input (edge list, DIMACS, lists file).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Well-formed input that violates a value invariant (loop, out-of-range vertex).
class ValidationError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside the domain of an operation (disconnected graph, Gallai tree, degree-0 vertex).
class DomainError : public std::domain_error {
    using std::domain_error::domain_error;
};

// Exponential operation asked to go past its enumeration bound.
class CapacityError : public std::length_error {
    using std::length_error::length_error;
};

}  // namespace brooks
