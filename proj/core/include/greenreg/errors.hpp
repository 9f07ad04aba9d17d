#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greenreg {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the domain on which the operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

// Input data violates a structural invariant (duplicate abscissae, bad sizes, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An integrand produced a non-finite value at a quadrature node.
class EvaluationError : public Error {
public:
    EvaluationError(double node, const std::string& what)
        : Error(what), node_(node) {}

    [[nodiscard]] double node() const noexcept { return node_; }

private:
    double node_;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError(std::size_t pivot, const std::string& what)
        : Error(what), pivot_(pivot) {}

    [[nodiscard]] std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

}  // namespace greenreg
