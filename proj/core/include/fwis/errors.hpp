#pragma once

#include <stdexcept>
#include <string>

namespace fwis {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition was violated by the caller.
struct ContractViolation : Error {
  explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

// A numeric routine failed to converge or produced non-finite values.
struct NumericError : Error {
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// A matrix left the positive semidefinite cone where it was required.
struct ConeError : Error {
  ConeError(const std::string& msg, int minor_order)
      : Error(msg), minor(minor_order) {}
  int minor;  // order of the offending leading minor, 1-based
};

// Invalid time grid (non-increasing times, degenerate covariance, ...).
struct GridError : Error {
  explicit GridError(const std::string& msg) : Error(msg) {}
};

// Bad CLI usage or malformed configuration.
struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Filesystem failures, annotated with the path involved.
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace fwis
