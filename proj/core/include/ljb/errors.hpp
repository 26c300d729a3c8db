#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace ljb {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand dimensions disagree (matrix sizes, coordinate lengths).
class ShapeError : public Error {
public:
    using Error::Error;
};

// An input value violates a construction invariant (non-Hermitian matrix,
// nonpositive hbar, zero sample count, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A stated precondition of an operation does not hold for these inputs
// (z inside a spectrum, state not Dirac, functional not vanishing on V).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The inputs are structurally valid but lie outside the regime the
// operation is defined on. Carries a numeric diagnostic where one exists
// (for the positivity combination: the offending minimum eigenvalue).
class DomainError : public Error {
public:
    DomainError(const std::string& what, double diagnostic)
        : Error(what), diagnostic_(diagnostic) {}
    explicit DomainError(const std::string& what) : Error(what) {}
    double diagnostic() const { return diagnostic_; }
    bool has_diagnostic() const { return diagnostic_ == diagnostic_; }

private:
    double diagnostic_ = std::numeric_limits<double>::quiet_NaN();
};

// The joint kernel of the constraints is trivial: the constrained theory
// admits no states at all.
class NoDiracStatesError : public DomainError {
public:
    using DomainError::DomainError;
};

// An internal cross-check failed (closure or ideal property of a computed
// subspace). Signals numerical rank misdetection, not caller error.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

// The alternating-projection extension could not reach a positive
// semidefinite solution: the functional is not the restriction of a state.
class ExtensionInfeasibleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Dense eigensolver / SVD did not converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Scenario/report file could not be read or parsed. Carries file context.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ljb
