#pragma once

#include <stdexcept>
#include <string>

namespace radpd {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments or parameters (maps to a validation failure in the CLI).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument at a pole of a meromorphic function, e.g. Gamma at 0, -1, -2, ...
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A Zastavnyi specification whose denominator is numerically zero.
class DegenerateSpecError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Preconditions of a verifier (e.g. the dimension bound of the monotonicity check) do not hold.
class HypothesisError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numerical failure: result not representable or not obtainable.
class NumericalError : public Error {
public:
    using Error::Error;
};

class OverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Density requested at z = 0 where it is unbounded.
class UnboundedAtOriginError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Unrecoverable pole collision in the Generalized Cauchy series.
class PoleCollisionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Iterative scheme did not reach its tolerance; carries the last estimate.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double partial_estimate)
        : NumericalError(what), partial_(partial_estimate) {}

    double partial_estimate() const noexcept { return partial_; }

private:
    double partial_;
};

}  // namespace radpd
