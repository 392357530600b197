#pragma once

#include <stdexcept>
#include <string>

namespace prab {

/// Base class of every error raised by the library.
///
/// `kind()` is a stable identifier used in machine-readable CLI output.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

/// A series or iteration did not reach the decaying regime within its cap.
class NonConvergence : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "NonConvergence"; }
};

/// Picard iteration hit its iteration cap.
class MaxItersExceeded : public NonConvergence {
public:
    MaxItersExceeded(const std::string& what, double last_update_norm)
        : NonConvergence(what), last_update_norm_(last_update_norm) {}
    const char* kind() const noexcept override { return "MaxItersExceeded"; }
    double last_update_norm() const noexcept { return last_update_norm_; }

private:
    double last_update_norm_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DomainError"; }
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DimensionMismatch"; }
};

/// A problem description violates a hypothesis of the solution theory.
class ValidationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ValidationError"; }
};

class PsiValidation : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "PsiValidation"; }
};

class OutOfRange : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "OutOfRange"; }
};

class SingularDiagonal : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "SingularDiagonal"; }
};

class IoError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "IoError"; }
};

}  // namespace prab
