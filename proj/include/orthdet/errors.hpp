#pragma once

#include <stdexcept>
#include <string>

namespace orthdet {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a malformed or out-of-range argument. CLI exit code 1.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The character is not in Irr+ (odd degree), so no orthogonal determinant.
class NotIrrPlusError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A mathematical identity that must hold was observed to fail. CLI exit code 2.
/// `witness()` carries everything needed to reproduce the failure.
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& what, std::string witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A configured size or effort limit was exceeded. CLI exit code 3.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// Factorization gave up within its budget; never returned as a wrong answer.
class UnfactoredError : public ResourceGuardError {
 public:
  using ResourceGuardError::ResourceGuardError;
};

}  // namespace orthdet
