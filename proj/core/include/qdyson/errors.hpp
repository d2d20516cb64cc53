#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qdyson {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// An argument outside the operation's domain (bad index, negative length, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Polynomials built over different variable sets were combined.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// A hypothesis of a recursion step or formula does not hold.  `hypothesis()`
/// names the failed condition so callers can report it.
class PreconditionError : public Error {
public:
    PreconditionError(std::string hypothesis, const std::string& detail)
        : Error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

    [[nodiscard]] const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// Parameters make a denominator of an identity vanish identically.
class DegenerateParameters : public Error {
public:
    using Error::Error;
};

}  // namespace qdyson
