#pragma once

#include <stdexcept>
#include <string>

namespace pgl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or arguments outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The final-size root finder did not converge. Carries the last bracket.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double lo, double hi)
        : Error(what), lo_(lo), hi_(hi) {}

    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// An implicit-derivative denominator fell below the guard threshold,
/// meaning the inputs are not on the stable final-size branch.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double denominator)
        : Error(what), denominator_(denominator) {}

    double denominator() const noexcept { return denominator_; }

private:
    double denominator_;
};

/// The requested quantity is identically degenerate for these parameters.
class DegenerateError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Output could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace pgl
