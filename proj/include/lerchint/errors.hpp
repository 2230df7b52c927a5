#pragma once

#include <stdexcept>
#include <string>

namespace lerchint {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside the region where the requested quantity is defined
// or where an implemented algorithm converges.
class DomainError : public Error {
public:
    using Error::Error;
};

// Gamma evaluated at (or within 1e-12 of) a nonpositive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Exponents that are required to be pairwise distinct are too close.
class DegeneracyError : public DomainError {
public:
    using DomainError::DomainError;
};

// Requested tolerance not reached within the work budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// An integrand or intermediate produced a non-finite value.
class EvaluationError : public Error {
public:
    using Error::Error;
};

} // namespace lerchint
