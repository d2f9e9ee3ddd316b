#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for every error raised by the library.
struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a symmetrized matrix product fails the Hermiticity readback
// check. This signals an arithmetic bug in the library, not a user error.
struct HermiticityViolation : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Constructor post-checks failed beyond the hard tolerance.
struct InvariantViolation : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct BaseMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct DegenerateTangent : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct DegenerateDirection : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct NotUnitSpeed : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct ZeroCovector : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct ZeroElement : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct NotNull : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct StepTooSmall : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct StepTooLarge : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct ConstraintViolation : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct ParseError : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct ConfigError : AlgebraError {
    using AlgebraError::AlgebraError;
};

} // namespace cayley
