#pragma once

#include <stdexcept>
#include <string>

namespace reeb {

/// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A computation that could not be completed on valid input. Exit code 1.
class ComputationError : public Error {
public:
    using Error::Error;
};

class ValidationError : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

/// Lutz-twist window does not have the required straight-segment shape.
class ShapeError : public InputError {
public:
    using InputError::InputError;
};

class NumericError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// The contact determinant is not strictly negative where it must be.
class ContactViolation : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// A planar curve passes through (or numerically onto) the origin.
class SingularityError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class ResolutionError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class InconsistencyError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class ConstructionError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

}  // namespace reeb
