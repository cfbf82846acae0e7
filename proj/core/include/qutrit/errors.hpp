#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qutrit {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input configuration violates one or more constraints. Carries every
/// violated constraint, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Base for failures during numerical evaluation.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Two quartic roots coincide, so residue weights are undefined.
class DegenerateRoots : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Adaptive quadrature could not reach its tolerance within budget.
class QuadratureFailure : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Contour inversion disagreed with itself between two resolutions.
class ContourFailure : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// |A|^2 + |B|^2 exceeded one by more than the allowed slack.
class NormViolation : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace qutrit
