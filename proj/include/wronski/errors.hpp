#pragma once

#include <stdexcept>
#include <string>

namespace wronski {

/// Precondition or argument outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity that must hold exactly did not; indicates a bug, not bad input.
class IdentityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis functions are linearly dependent (Wronskian vanishes identically).
class DependentBasisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation point sits on a zero of the Wronskian.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Float spectrum too clustered to separate eigenspaces.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interpolated eigenvalue polynomial failed its held-out residual check.
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wronski
